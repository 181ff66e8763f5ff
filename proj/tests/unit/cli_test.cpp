#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kalliance/cli.hpp"
#include "kalliance/edge_list.hpp"
#include "kalliance/families.hpp"
#include "kalliance/product.hpp"

using namespace kalliance;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "kalliance");
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("kalliance_cli_" + std::to_string(counter_++)))
    {
        fs::create_directories(dir_);
        write("p3.el", family::path(3));
        write("s3.el", family::star(3));
        write("p4.el", family::path(4));
        write("c4.el", family::cycle(4));
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const Graph& g) const { write_edge_list_file(path(name), g); }
    void write_text(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

private:
    static inline int counter_ = 0;
    fs::path dir_;
};

}  // namespace

TEST_CASE("check prints the verdict")
{
    Workspace ws;
    Result yes = run({"check", "-g", ws.path("p3.el"), "-s", "0,2", "-k", "2", "--kind", "offensive"});
    CHECK(yes.status == 0);
    CHECK(yes.out == "true\n");

    Result no = run({"check", "-g", ws.path("p3.el"), "-s", "1", "-k", "2", "--kind", "offensive"});
    CHECK(no.status == 1);
    CHECK(no.out == "false\n");

    Result negative_k = run({"check", "-g", ws.path("p3.el"), "-s", "0", "-k", "-1", "--kind", "d"});
    CHECK(negative_k.status == 0);

    Result outside = run({"check", "-g", ws.path("p3.el"), "-s", "0,5", "-k", "2", "--kind", "offensive"});
    CHECK(outside.status == 2);
    CHECK(outside.err.find("outside universe") != std::string::npos);

    CHECK(run({"check", "-g", ws.path("p3.el"), "-s", "0,x", "-k", "2", "--kind", "o"}).status == 2);
    CHECK(run({"check", "-g", ws.path("p3.el"), "-s", "", "-k", "2", "--kind", "o"}).status == 2);
    CHECK(run({"check", "-g", ws.path("p3.el"), "-s", "0", "-k", "2", "--kind", "global"}).status == 2);
}

TEST_CASE("phi and table")
{
    Workspace ws;
    Result p = run({"phi", "-g", ws.path("p3.el"), "-k", "2", "--kind", "offensive"});
    CHECK(p.status == 0);
    CHECK(p.out.find("value 2\n") != std::string::npos);
    CHECK(p.out.find("witness {0,1}\n") != std::string::npos);

    Result t = run({"table", "-g", ws.path("p3.el"), "--kind", "offensive"});
    CHECK(t.status == 0);
    CHECK(t.out == "k phi witness\n0 0 {}\n1 1 {0}\n2 2 {0,1}\n");

    Result tj = run({"--json", "table", "-g", ws.path("p3.el"), "--kind", "offensive"});
    nlohmann::json doc = nlohmann::json::parse(tj.out);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["k"] == 0);
    CHECK(doc["rows"][2]["value"] == 2);
}

TEST_CASE("json and text agree")
{
    Workspace ws;
    Result text = run({"phi", "-g", ws.path("s3.el"), "-k", "0", "--kind", "defensive"});
    Result json = run({"--json", "phi", "-g", ws.path("s3.el"), "-k", "0", "--kind", "defensive"});
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(text.out.find("value " + std::to_string(doc["value"].get<int>()) + "\n") != std::string::npos);
    CHECK(doc["witness"] == nlohmann::json::array({1, 2, 3}));
    CHECK(text.out.find("witness {1,2,3}") != std::string::npos);
    CHECK(text.out.find("certificate_size " + std::to_string(doc["certificate_size"].get<int>()))
          != std::string::npos);

    Result check = run({"--json", "check", "-g", ws.path("p3.el"), "-s", "0,2", "-k", "2", "--kind", "o"});
    CHECK(check.status == 0);
    CHECK(nlohmann::json::parse(check.out)["holds"] == true);

    Result minimal = run({"--json", "minimal", "-g", ws.path("p3.el"), "-k", "2", "--kind", "o"});
    CHECK(nlohmann::json::parse(minimal.out)["sets"] == nlohmann::json::parse("[[0,2]]"));
    Result minimal_text = run({"minimal", "-g", ws.path("p3.el"), "-k", "2", "--kind", "o"});
    CHECK(minimal_text.out == "kind offensive\nk 2\ncount 1\n{0,2}\n");
}

TEST_CASE("product and family round trip")
{
    Workspace ws;
    Result made = run({"family", "grid", "3", "4", "-o", ws.path("grid.el")});
    CHECK(made.status == 0);
    CHECK(read_edge_list_file(ws.path("grid.el")) == family::grid(3, 4));

    Result tree = run({"family", "random_tree", "7", "--seed", "3", "-o", ws.path("tree.el")});
    CHECK(tree.status == 0);
    CHECK(read_edge_list_file(ws.path("tree.el")) == family::random_tree(7, 3));

    Result printed = run({"family", "path", "3"});
    CHECK(printed.out == "3\n0 1\n1 2\n");

    Result prod = run({"product", "-g1", ws.path("s3.el"), "-g2", ws.path("p4.el"), "-o", ws.path("s3xp4.el")});
    CHECK(prod.status == 0);
    CHECK(read_edge_list_file(ws.path("s3xp4.el")) == cartesian_product(family::star(3), family::path(4)));

    CHECK(run({"family", "cycle", "2"}).status == 2);
    CHECK(run({"family", "grid", "3"}).status == 2);
}

TEST_CASE("witness subcommand")
{
    Workspace ws;
    Result column = run({"witness", "--construction", "column", "-g1", ws.path("c4.el"), "-g2", ws.path("p3.el"),
                         "--axis", "2", "--s2", "0,1", "--k1", "2", "--kind", "offensive"});
    CHECK(column.status == 0);
    CHECK(column.out.find("k_claim 0\n") != std::string::npos);
    CHECK(column.out.find("size 8\n") != std::string::npos);
    CHECK(column.out.find("result {(0,0),(0,1),(1,0),(1,1),(2,0),(2,1),(3,0),(3,1)}") != std::string::npos);
    CHECK(column.out.find("verified true") != std::string::npos);

    Result json = run({"--json", "witness", "--construction", "column", "-g1", ws.path("c4.el"), "-g2",
                       ws.path("p3.el"), "--axis", "2", "--s2", "0,1", "--k1", "2", "--kind", "offensive"});
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["result"] == nlohmann::json::array({0, 1, 3, 4, 6, 7, 9, 10}));
    CHECK(doc["verified"] == true);

    Result diag = run({"witness", "--construction", "box_plus_diagonal", "-g1", ws.path("s3.el"), "-g2",
                       ws.path("p4.el"), "--s1", "1,2,3", "--s2", "0,1,2", "--k1", "0", "--k2", "1"});
    CHECK(diag.status == 0);
    CHECK(diag.out.find("size 10\n") != std::string::npos);
    CHECK(diag.out.find("(0,3)") != std::string::npos);

    Result bad = run({"witness", "--construction", "box", "-g1", ws.path("s3.el"), "-g2", ws.path("p4.el"), "--s1",
                      "0,1,2,3", "--s2", "0", "--k1", "0", "--k2", "1"});
    CHECK(bad.status == 2);
}

TEST_CASE("audit subcommand")
{
    Result ok = run({"audit", "--theorem", "vizing_alpha", "--seed", "3", "--trials", "4"});
    CHECK(ok.status == 0);
    CHECK(ok.out.rfind("audit theorem=vizing_alpha status=passed trials=4", 0) == 0);

    Result none = run({"audit", "--theorem", "remark1", "--trials", "0"});
    CHECK(none.status == 1);
    CHECK(none.out.find("status=inconclusive") != std::string::npos);

    Result json = run({"--json", "audit", "--theorem", "th_union", "--trials", "3", "--seed", "8"});
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["config"]["seed"] == 8);
    CHECK(doc["reports"][0]["trials"] == 3);
    CHECK(doc["passed"] == true);

    CHECK(run({"audit", "--theorem", "nope"}).status == 2);
    CHECK(run({"audit", "--max-factor-order", "6"}).status == 2);
}

TEST_CASE("usage and parse errors exit with 2")
{
    Workspace ws;
    ws.write_text("broken.el", "3\n0 1\n1 1\n");
    Result broken = run({"phi", "-g", ws.path("broken.el"), "-k", "0", "--kind", "d"});
    CHECK(broken.status == 2);
    CHECK(broken.err.find("line 3") != std::string::npos);

    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"phi", "-g", ws.path("p3.el"), "--kind", "d"}).status == 2);
    CHECK(run({"phi", "-g", ws.path("missing.el"), "-k", "0", "--kind", "d"}).status == 2);

    ws.write("big.el", family::empty(30));
    CHECK(run({"phi", "-g", ws.path("big.el"), "-k", "0", "--kind", "d"}).status == 2);

    Result help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("a*n2 + b") != std::string::npos);
}
