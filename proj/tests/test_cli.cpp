#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "delone/cli.hpp"
#include "delone/io.hpp"
#include "delone/verify.hpp"

using namespace delone;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "delone");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("delone_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content = "") const {
        const auto p = path_ / name;
        if (!content.empty()) std::ofstream(p) << content;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, LatticeCommands) {
    const auto covol = run_cli({"lattice", "--group", "Z2", "--basis", "2", "0", "0", "3", "--op", "covol"});
    EXPECT_EQ(covol.code, 0);
    EXPECT_EQ(covol.out, "6\n");
    EXPECT_EQ(run_cli({"lattice", "--group", "Z2", "--basis", "2 0 0 3", "--op", "density"}).out, "1/6\n");
    EXPECT_EQ(run_cli({"lattice", "--group", "H3", "--basis", "2", "--op", "density"}).out, "1/16\n");
    const auto fd = run_cli({"lattice", "--group", "Z2", "--basis", "2", "0", "0", "3", "--op", "fd"});
    EXPECT_EQ(fd.code, 0);
    std::istringstream in(fd.out);
    EXPECT_EQ(read_gset(in).second, GSet(PointSet::box({0, 0}, {2, 3})));
}

TEST(Cli, GenModelsetFibonacciMatchesBruteForce) {
    TempDir dir;
    const std::string path = dir.file("fib.txt");
    const auto r = run_cli({"gen-modelset", "--scheme", "fib", "--window", "-1", "0.618", "--range", "0", "100", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    const auto pts = read_phi_points(in);
    const auto w = PhiIntervalSet::interval(QPhi(-1), QPhi(make_rational(309, 500)));
    EXPECT_EQ(static_cast<std::int64_t>(pts.size()), verify::brute_force_fibonacci_count(w, 0, 100, 200));
    for (const auto& p : pts) EXPECT_TRUE(w.contains(to_qphi(p.conj())));
}

TEST(Cli, GenModelsetCyclic) {
    const auto r = run_cli({"gen-modelset", "--scheme", "cyclic", "--modulus", "5", "--window", "0", "1", "--range", "0", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "# group=Z d=1\n0\n1\n5\n6\n");
}

TEST(Cli, VerifyIsReproducible) {
    const std::vector<std::string> args{"verify", "--suite", "boundaries", "--cases", "50", "--seed", "7"};
    const auto a = run_cli(args), b = run_cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["suites"][0]["seed"].get<int>(), 7);
    EXPECT_NE(a.err.find("runtime_s="), std::string::npos);
    EXPECT_EQ(a.out.find("runtime"), std::string::npos);
}

TEST(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"nonsense"}).code, 2);
    EXPECT_EQ(run_cli({"lattice", "--group", "Z2", "--basis", "1", "2", "2", "4"}).code, 2);
    EXPECT_EQ(run_cli({"lattice", "--group", "Z2", "--basis", "1", "2", "3"}).code, 2);
    EXPECT_EQ(run_cli({"lattice", "--group", "Q9", "--basis", "1"}).code, 2);
    EXPECT_EQ(run_cli({"gen-modelset", "--scheme", "fib", "--window", "-1", "--range", "0", "10"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--suite", "no-such-suite"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, VerificationFailuresExitWithThree) {
    const auto r = run_cli({"almost-periods", "--scheme", "fib", "--window", "-1", "0.618", "--eps", "1e-30"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("NoWindowFound"), std::string::npos);
}

TEST(Cli, FolnerRatioCsv) {
    const auto r = run_cli({"folner-ratio", "--family", "comb", "--eps", "1/10", "--kind", "strong", "--n", "10,100"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "n,ratio\n10,31/90\n100,2119/9900\n");
    const auto t = run_cli({"folner-ratio", "--family", "comb", "--eps", "1/10", "--kind", "strong", "--n", "10", "--thicken"});
    EXPECT_EQ(t.out, "n,ratio\n10,4/119\n");
}

TEST(Cli, BoundaryAndComparisons) {
    TempDir dir;
    const std::string k = dir.file("k.txt", "# group=Z d=1\n-1\n0\n1\n");
    const std::string a = dir.file("a.txt", "# group=Z d=1\n0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n");
    const auto r = run_cli({"boundary", "--group", "Z1", "--kind", "strong", "--K", k, "--A", a});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "# group=Z d=1\n-1\n0\n9\n10\n");
    const auto c = run_cli({"boundary", "--group", "Z1", "--K", k, "--A", a, "--compare"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_TRUE(nlohmann::json::parse(c.out)["all"].get<bool>());
    EXPECT_EQ(run_cli({"boundary", "--group", "Z1", "--K", dir.file("missing.txt"), "--A", a}).code, 2);
}

TEST(Cli, DensityReportCarriesCertificationFlags) {
    const auto r = run_cli({"density", "--source", "cyclic", "--modulus", "5", "--window", "0", "1", "--gamma", "1", "--n", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["haar_normalization"], "counting measure");
    EXPECT_EQ(j["a_density"]["value"], "2/5");
    EXPECT_EQ(j["beurling"]["minus_cert"], "exact");
    EXPECT_EQ(j["leptin"]["minus"], "2/5");
    EXPECT_TRUE(j["chain_holds"].get<bool>());
    EXPECT_TRUE(j["sandwich_holds"].get<bool>());
    EXPECT_EQ(j["lattice_relative"]["minus"], "2/5");

    const auto h = run_cli({"density", "--source", "lattice", "--group", "H3", "--basis", "2", "--n", "4"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(nlohmann::json::parse(h.out)["a_density"]["value"], "1/16");
}

TEST(Cli, DensityFormulaReport) {
    const auto r = run_cli({"density-formula", "--scheme", "cyclic", "--modulus", "5", "--window", "0", "1", "--n", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["empirical"], "2/5");
    EXPECT_TRUE(j["within_allowed_deviation"].get<bool>());
}
