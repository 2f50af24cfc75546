#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "report.hpp"

#include "rankone/errors.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sys/wait.h>

using namespace rankone;
using rankone::cli::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const char* exe = std::getenv("RANKONE_CLI");
    REQUIRE(exe != nullptr);
    std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
    int status = pclose(pipe.release());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("structure report") {
    json r = cli::cmd_structure(GroupFamily::f4());
    CHECK(r["results"]["m_alpha"] == 8);
    CHECK(r["results"]["m_2alpha"] == 7);
    CHECK(r["results"]["rho_H"] == "11/1");
    CHECK(cli::passed(r));
    for (const auto& c : r["checks"]) CHECK(c.contains("tag"));
}

TEST_CASE("scalars report") {
    auto g = GroupFamily::so(3);
    json r = cli::cmd_scalars(g, KTypeLabel(g, {0}), KTypeLabel(g, {1}), -1);
    CHECK(r["results"]["T"] == "0/1");
    CHECK(r["results"]["lambda"] == "1/1");
    CHECK(r["results"]["root_mu_H"] == "-1/1");
}

TEST_CASE("exceptional, socle and tensor reports") {
    json e = cli::cmd_exceptional(GroupFamily::sp(2), 3);
    CHECK(e["results"]["parameters"][2]["closed_form"] == "-7/1");
    CHECK(e["results"]["parameters"][2]["scan"] == "-7/1");
    CHECK(cli::passed(e));
    json s = cli::cmd_socle(GroupFamily::f4(), 1);
    CHECK(s["results"]["minimal_ktypes"][0]["label"] == "V4,0");
    CHECK(s["results"]["langlands"]["limit_of_discrete_series"] == true);
    auto g = GroupFamily::su(3);
    json t = cli::cmd_tensor(g, KTypeLabel(g, {1, 1}));
    CHECK(t["results"]["summands"].size() == 6);
    CHECK(cli::passed(t));
}

TEST_CASE("verify report is deterministic and passes") {
    cli::Options opt;
    opt.depth = 2;
    json a = cli::cmd_verify("spherical", opt), b = cli::cmd_verify("spherical", opt);
    CHECK(a.dump() == b.dump());
    CHECK(cli::passed(a));
    CHECK_THROWS_AS(cli::cmd_verify("nonsense", opt), DomainError);
}

TEST_CASE("csv output") {
    json r = cli::cmd_structure(GroupFamily::so(5));
    std::string csv = cli::to_csv(r);
    CHECK(csv.rfind("kind,name,tag,status,detail\n", 0) == 0);
    CHECK(csv.find("result,rho_H,,,2/1") != std::string::npos);
}

TEST_CASE("binary: exit codes and byte determinism") {
    auto a = run("structure F4");
    CHECK(a.code == 0);
    CHECK(json::parse(a.out)["results"]["rho_H"] == "11/1");
    CHECK(run("structure F4").out == a.out);

    auto s = run("scalars SO 3 Y0 Y1 --mu -1");
    CHECK(s.code == 0);
    CHECK(json::parse(s.out)["results"]["T"] == "0/1");

    CHECK(run("tensor SO 3 Y-1").code == 2);
    CHECK(run("structure G2 3").code == 2);
    CHECK(run("scalars SO 5 Y0 Y2").code == 2);
    CHECK(run("tensor SO 2 Y1").code == 2);
    CHECK(run("").code == 2);

    auto v = run("--depth 2 --format csv verify scalars");
    CHECK(v.code == 0);
    CHECK(v.out.find("check,") != std::string::npos);
    CHECK(run("--depth 2 --format csv verify scalars").out == v.out);
}
