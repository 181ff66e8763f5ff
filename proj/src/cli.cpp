#include "kalliance/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "kalliance/audit.hpp"
#include "kalliance/edge_list.hpp"
#include "kalliance/error.hpp"
#include "kalliance/families.hpp"
#include "kalliance/phi.hpp"
#include "kalliance/product_theory.hpp"
#include "kalliance/serialize.hpp"

namespace kalliance::cli {

namespace {

constexpr const char* kFooter =
    "Graph files: first non-comment line is the vertex count n, then one\n"
    "'u v' edge per line with 0-based ids; '#' starts a comment line.\n"
    "Vertex lists are comma-separated 0-based ids, e.g. -s 0,2.\n"
    "Product vertices: (a,b) of G1 x G2 has id a*n2 + b. Text output prints\n"
    "(a,b); --json prints the id.\n"
    "Exit status: 0 success/true, 1 false/failed audit, 2 usage or capacity error.";

std::vector<Vertex> parse_list(const std::string& text)
{
    std::vector<Vertex> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != token.size())
            throw InvalidInput("bad vertex id '" + token + "' in list '" + text + "'");
        out.push_back(v);
    }
    return out;
}

VertexSet parse_set(const std::string& text, int universe) { return VertexSet::of(universe, parse_list(text)); }

std::string pair_list(const VertexSet& s, const ProductLayout& layout)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex x : s.members()) {
        os << (first ? "" : ",") << '(' << layout.first(x) << ',' << layout.second(x) << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

std::string shown(const VertexSet& s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

struct Common {
    bool json = false;
};

struct GraphKindK {
    std::string graph;
    int k = 0;
    std::string kind = "defensive";
};

void add_graph_kind_k(CLI::App* cmd, GraphKindK& o, bool with_k)
{
    cmd->add_option("-g,--graph", o.graph, "edge-list file")->required();
    if (with_k)
        cmd->add_option("-k", o.k, "alliance parameter")->required();
    cmd->add_option("--kind", o.kind, "defensive | offensive | powerful (or d/o/p)")->required();
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(std::span<const std::string> args);

private:
    int check();
    int minimal();
    int phi();
    int product();
    int witness();
    int audit();
    int family();
    int table();

    void emit(const nlohmann::json& doc) { out_ << doc.dump(2) << '\n'; }

    std::ostream& out_;
    std::ostream& err_;
    Common common_;

    GraphKindK gk_;
    std::string set_;
    std::string g1_, g2_, output_;
    std::string construction_ = "column";
    std::string s1_, s2_;
    int k1_ = 0, k2_ = 0;
    int axis_ = 1;
    std::string theorem_ = "all";
    AuditConfig audit_;
    std::string family_kind_;
    std::vector<int> family_params_;
    std::uint64_t family_seed_ = 0;
};

int Runner::run(std::span<const std::string> args)
{
    CLI::App app{"k-alliance free and cover sets, and their behaviour under Cartesian products"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.add_flag("--json", common_.json, "structured output (one JSON document)");

    auto* check = app.add_subcommand("check", "is S an alliance of the given kind and k");
    add_graph_kind_k(check, gk_, true);
    check->add_option("-s,--set", set_, "comma-separated vertex ids")->required();

    auto* minimal = app.add_subcommand("minimal", "list the inclusion-minimal alliances");
    add_graph_kind_k(minimal, gk_, true);

    auto* phi = app.add_subcommand("phi", "maximum free set size with a witness");
    add_graph_kind_k(phi, gk_, true);

    auto* product = app.add_subcommand("product", "write G1 x G2 as an edge list");
    product->add_option("--g1", g1_, "first factor (-g1 is accepted)")->required();
    product->add_option("--g2", g2_, "second factor (-g2 is accepted)")->required();
    product->add_option("-o,--output", output_, "output file (stdout when omitted)");

    auto* witness = app.add_subcommand("witness", "build a product free set from factor free sets and verify it");
    witness->add_option("--construction", construction_, "column | box | box_plus_diagonal | union")
        ->capture_default_str();
    witness->add_option("--g1", g1_, "first factor (-g1 is accepted)")->required();
    witness->add_option("--g2", g2_, "second factor (-g2 is accepted)")->required();
    witness->add_option("--s1", s1_, "free set of G1 (column with --axis 1, box, union)");
    witness->add_option("--s2", s2_, "free set of G2 (column with --axis 2, box, union)");
    witness->add_option("--k1", k1_, "k of the G1 set (column: k of the chosen factor)");
    witness->add_option("--k2", k2_, "k of the G2 set");
    witness->add_option("--axis", axis_, "column: 1 builds S1 x V2, 2 builds V1 x S2")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    witness->add_option("--kind", gk_.kind, "defensive | offensive | powerful")->capture_default_str();

    auto* audit = app.add_subcommand("audit", "randomised check of the product theorems");
    audit->add_option("--theorem", theorem_, "theorem id, or 'all'")->capture_default_str();
    audit->add_option("--seed", audit_.seed)->capture_default_str();
    audit->add_option("--trials", audit_.trials_per_theorem, "hypothesis-satisfying trials per theorem")
        ->capture_default_str();
    audit->add_option("--max-factor-order", audit_.max_factor_order)->capture_default_str();
    audit->add_option("--max-product-order", audit_.max_product_order)->capture_default_str();

    auto* family = app.add_subcommand("family", "generate a named graph");
    family->add_option("kind", family_kind_, "path cycle star complete wheel grid empty random_tree gnp")
        ->required();
    family->add_option("params", family_params_, "integer parameters (gnp: n num den)")->required();
    family->add_option("--seed", family_seed_, "seed for random_tree and gnp")->capture_default_str();
    family->add_option("-o,--output", output_, "output file (stdout when omitted)");

    auto* table = app.add_subcommand("table", "phi for every canonical k");
    add_graph_kind_k(table, gk_, false);

    // CLI11 option names cannot be "-g1"; accept the short spelling anyway.
    std::vector<std::string> argv_storage(args.begin(), args.end());
    for (std::string& a : argv_storage)
        if (a == "-g1" || a == "-g2")
            a = "-" + a;
    if (argv_storage.empty())
        argv_storage.emplace_back("kalliance");
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_, err_);
        return code == 0 ? ok : usage;
    }

    try {
        if (*check)
            return this->check();
        if (*minimal)
            return this->minimal();
        if (*phi)
            return this->phi();
        if (*product)
            return this->product();
        if (*witness)
            return this->witness();
        if (*audit)
            return this->audit();
        if (*family)
            return this->family();
        return this->table();
    } catch (const Error& e) {
        err_ << "error: " << e.what() << '\n';
        return usage;
    }
}

int Runner::check()
{
    const Graph g = read_edge_list_file(gk_.graph);
    const AllianceKind kind = parse_alliance_kind(gk_.kind);
    const VertexSet s = parse_set(set_, g.order());
    const AllianceVerdict verdict = check_alliance(g, s, gk_.k, kind);
    if (common_.json) {
        emit({{"kind", to_string(kind)},
              {"k", gk_.k},
              {"set", to_json(s)},
              {"holds", verdict.holds},
              {"k_in_canonical_range", verdict.k_in_canonical_range}});
    } else {
        out_ << (verdict.holds ? "true" : "false") << '\n';
        if (!verdict.k_in_canonical_range)
            out_ << "note: k outside the canonical range\n";
    }
    return verdict.holds ? ok : negative;
}

int Runner::minimal()
{
    const Graph g = read_edge_list_file(gk_.graph);
    const MinimalAllianceFamily family = enumerate_minimal_alliances(g, gk_.k, parse_alliance_kind(gk_.kind));
    if (common_.json) {
        emit(to_json(family));
    } else {
        out_ << "kind " << to_string(family.kind) << "\nk " << family.k << "\ncount " << family.sets.size() << '\n';
        for (const VertexSet& s : family.sets)
            out_ << s << '\n';
    }
    return ok;
}

int Runner::phi()
{
    const Graph g = read_edge_list_file(gk_.graph);
    const PhiResult r = kalliance::phi(g, gk_.k, parse_alliance_kind(gk_.kind));
    if (common_.json) {
        emit(to_json(r));
    } else {
        out_ << "kind " << to_string(r.kind) << "\nk " << r.k << "\nvalue " << r.value << "\nwitness " << r.witness
             << "\ncertificate_size " << r.certificate.sets.size() << '\n';
    }
    return ok;
}

int Runner::product()
{
    const Graph g = cartesian_product(read_edge_list_file(g1_), read_edge_list_file(g2_));
    if (!output_.empty())
        write_edge_list_file(output_, g);
    if (common_.json) {
        nlohmann::json doc = to_json(g);
        if (!output_.empty())
            doc["output"] = output_;
        emit(doc);
    } else if (output_.empty()) {
        write_edge_list(out_, g);
    } else {
        out_ << "wrote " << g.order() << " vertices, " << g.edge_count() << " edges to " << output_ << '\n';
    }
    return ok;
}

int Runner::witness()
{
    const Graph g1 = read_edge_list_file(g1_);
    const Graph g2 = read_edge_list_file(g2_);
    const AllianceKind kind = parse_alliance_kind(gk_.kind);
    const Construction c = parse_construction(construction_);
    ProductWitness w;
    switch (c) {
    case Construction::column:
        w = axis_ == 1 ? column_witness(g1, g2, parse_set(s1_, g1.order()), Axis::first, k1_, kind)
                       : column_witness(g1, g2, parse_set(s2_, g2.order()), Axis::second, k1_, kind);
        break;
    case Construction::box:
        w = box_witness(g1, g2, parse_set(s1_, g1.order()), parse_set(s2_, g2.order()), k1_, k2_, kind);
        break;
    case Construction::box_plus_diagonal:
        w = box_plus_diagonal_witness(g1, g2, parse_set(s1_, g1.order()), parse_set(s2_, g2.order()), k1_, k2_,
                                      kind);
        break;
    case Construction::union_of_columns:
        w = union_witness(g1, g2, parse_set(s1_, g1.order()), parse_set(s2_, g2.order()), k1_, k2_);
        break;
    }
    verify_witness(cartesian_product(g1, g2), w);
    if (common_.json) {
        emit(to_json(w));
    } else {
        out_ << "construction " << to_string(w.construction) << "\nkind " << to_string(w.kind) << "\nk_claim "
             << w.k_claim << "\nsize " << w.result.size() << "\nresult " << pair_list(w.result, w.layout)
             << "\nverified " << (w.verified ? "true" : "false") << '\n';
    }
    return w.verified ? ok : negative;
}

int Runner::audit()
{
    audit_.validate();
    std::vector<AuditReport> reports;
    if (theorem_ == "all")
        reports = audit_all(audit_);
    else
        reports.push_back(kalliance::audit(parse_theorem_id(theorem_), audit_));

    bool all_passed = true;
    for (const AuditReport& r : reports)
        all_passed = all_passed && r.passed();

    if (common_.json) {
        nlohmann::json list = nlohmann::json::array();
        for (const AuditReport& r : reports)
            list.push_back(to_json(r));
        emit({{"config", to_json(audit_)}, {"passed", all_passed}, {"reports", list}});
    } else {
        for (const AuditReport& r : reports)
            out_ << to_record_lines(r);
    }
    return all_passed ? ok : negative;
}

int Runner::family()
{
    const Graph g = kalliance::family::make(family_kind_, family_params_, family_seed_);
    if (!output_.empty())
        write_edge_list_file(output_, g);
    if (common_.json) {
        nlohmann::json doc = to_json(g);
        if (!output_.empty())
            doc["output"] = output_;
        emit(doc);
    } else if (output_.empty()) {
        write_edge_list(out_, g);
    } else {
        out_ << "wrote " << g.order() << " vertices, " << g.edge_count() << " edges to " << output_ << '\n';
    }
    return ok;
}

int Runner::table()
{
    const Graph g = read_edge_list_file(gk_.graph);
    const AllianceKind kind = parse_alliance_kind(gk_.kind);
    const KRange range = canonical_k_range(g, kind);
    nlohmann::json rows = nlohmann::json::array();
    if (!common_.json)
        out_ << "k phi witness\n";
    for (int k = range.lo; k <= range.hi; ++k) {
        const PhiResult r = kalliance::phi(g, k, kind);
        if (common_.json)
            rows.push_back({{"k", k}, {"value", r.value}, {"witness", to_json(r.witness)}});
        else
            out_ << k << ' ' << r.value << ' ' << shown(r.witness) << '\n';
    }
    if (common_.json)
        emit({{"kind", to_string(kind)}, {"rows", rows}});
    return ok;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    Runner runner(out, err);
    return runner.run(args);
}

}  // namespace kalliance::cli
