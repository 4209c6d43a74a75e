#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mckay/group_spec.hpp"

using namespace mckay;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(MCKAY_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_spec(const std::string& name, const std::string& text) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

}  // namespace

TEST_CASE("spec parsing") {
    GroupSpec c = parse_spec_text("kind=cyclic n=3 r=3 weights=1,1,1");
    CHECK(c.kind == GroupSpec::Kind::Cyclic);
    CHECK(c.n == 3);
    CHECK(c.r == 3);
    CHECK(c.weights == std::vector<long>{1, 1, 1});

    GroupSpec t = parse_spec_text("kind=table path=data/binary_icosahedral.tbl");
    CHECK(t.kind == GroupSpec::Kind::Table);
    CHECK(t.table_path == "data/binary_icosahedral.tbl");

    // multi-line with comments parses the same way
    GroupSpec m = parse_spec_text("# cyclic example\nkind=cyclic\nn=2 r=4\nweights=1,3\n");
    CHECK(m.r == 4);

    CHECK_THROWS_AS(parse_spec_text("kind=banana"), McKayError);
    CHECK_THROWS_AS(parse_spec_text("n=3 r=3 weights=1,1,1"), McKayError);
    CHECK_THROWS_AS(parse_spec_text("kind=cyclic n=3 r=3 weights=1,x,1"), McKayError);
}

TEST_CASE("golden reports are byte identical") {
    fs::path spec_z3 = write_spec("golden_z3.spec", "kind=cyclic n=3 r=3 weights=1,1,1\n");
    fs::path out_z3 = fs::temp_directory_path() / "golden_out_z3";
    REQUIRE(run_cli("report " + spec_z3.string() + " -o " + out_z3.string()) == 0);
    CHECK(slurp(out_z3 / "report.json") ==
          slurp(fs::path(MCKAY_GOLDEN_DIR) / "report_z3_111.json"));

    fs::path spec_i =
        write_spec("golden_icosa.spec", "kind=table path=binary_icosahedral.tbl\n");
    fs::path out_i = fs::temp_directory_path() / "golden_out_icosa";
    REQUIRE(run_cli("report " + spec_i.string() + " -o " + out_i.string()) == 0);
    CHECK(slurp(out_i / "report.json") ==
          slurp(fs::path(MCKAY_GOLDEN_DIR) / "report_binary_icosahedral.json"));

    CHECK(slurp(out_i / "report.json").find("\"ade\": \"E8\"") != std::string::npos);
}

TEST_CASE("exit codes per error category") {
    // syntax error -> 2
    fs::path bad_syntax = write_spec("bad_syntax.spec", "kind cyclic\n");
    CHECK(run_cli("report " + bad_syntax.string()) == 2);

    // SL violation -> 3
    fs::path not_sl = write_spec("not_sl.spec", "kind=cyclic n=3 r=3 weights=1,1,2\n");
    CHECK(run_cli("report " + not_sl.string()) == 3);

    // non-isolated singularity -> 3, with the module's message verbatim
    fs::path not_free = write_spec("not_free.spec", "kind=cyclic n=3 r=3 weights=1,2,0\n");
    CHECK(run_cli("eta " + not_free.string()) == 3);
    fs::path errfile = fs::temp_directory_path() / "not_free.err";
    std::string cmd = std::string(MCKAY_CLI_PATH) + " report " + not_free.string() +
                      " > /dev/null 2> " + errfile.string();
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 3);
    CHECK(slurp(errfile).find("non-isolated singularity") != std::string::npos);

    // numeric non-convergence -> 4
    fs::path z2 = write_spec("flow_z2.spec", "kind=cyclic n=2 r=2 weights=1,1\n");
    CHECK(run_cli("flow " + z2.string() + " --max-iters 1 --target 50 -o " +
                  (fs::temp_directory_path() / "flow_fail").string()) == 4);

    // missing file -> 2
    CHECK(run_cli("report /nonexistent/path.spec") == 2);
}

TEST_CASE("MCKAY_DATA overrides the bundled table directory") {
    fs::path override_dir = fs::temp_directory_path() / "mckay_data_override";
    fs::create_directories(override_dir);
    fs::copy_file(fs::path(MCKAY_DATA_DIR) / "binary_tetrahedral.tbl",
                  override_dir / "renamed_tetra.tbl", fs::copy_options::overwrite_existing);

    fs::path spec = write_spec("override.spec", "kind=table path=renamed_tetra.tbl\n");
    std::string cmd = "MCKAY_DATA=" + override_dir.string() + " " + MCKAY_CLI_PATH +
                      " cartan " + spec.string() + " > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    // without the override the table name resolves nowhere
    CHECK(run_cli("cartan " + spec.string()) == 3);
}

TEST_CASE("spectrum and quiver subcommands") {
    CHECK(run_cli("spectrum -n 3 --cutoff 11/2") == 0);
    CHECK(run_cli("spectrum -n 3 --cutoff 1/2") == 3);  // below the gap
    fs::path spec = write_spec("quiver_z3.spec", "kind=cyclic n=3 r=3 weights=1,1,1\n");
    CHECK(run_cli("quiver " + spec.string() + " --dot") == 0);
}
