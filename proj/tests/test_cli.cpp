#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "chebmom/chebyshev.hpp"
#include "chebmom/rat_poly.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(CHEBMOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

json parse(const RunResult& r) {
    REQUIRE_FALSE(r.out.empty());
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("member: the T_6 counterexample is reported as a certified member") {
    const RunResult r = run_cli("member -n 6 --node 6 5 1 -q dT3+dT2");
    CHECK(r.exit_code == 0);
    const json out = parse(r);
    CHECK(out.at("schema") == 1);
    CHECK(out.at("verdict") == "member");
    CHECK(out.at("certified") == true);
    CHECK(out.at("certificate").size() == 2);
    CHECK(out.at("certificate")[0].at("m") == 2);
    CHECK(out.at("certificate")[1].at("m") == 3);
    CHECK(out.at("violations").empty());
}

TEST_CASE("member: -n may be omitted when the pair carries n") {
    const RunResult r = run_cli("member --node 6 5 1 -q dT3+dT2");
    CHECK(r.exit_code == 0);
    CHECK(parse(r).at("verdict") == "member");
}

TEST_CASE("member: refutation exits 1 and carries a witness") {
    const RunResult r = run_cli("member -n 6 --node 6 5 1 -q dT5");
    CHECK(r.exit_code == 1);
    const json out = parse(r);
    CHECK(out.at("verdict") == "non_member");
    CHECK(out.at("violations") == json::array({5}));
    CHECK(out.at("witness").at("i") == 0);
    CHECK(out.at("witness").at("zero") == false);
}

TEST_CASE("moments: exact zeros for the member triple") {
    const RunResult r = run_cli("moments -n 6 --node 6 5 1 -q dT3+dT2 --imax 5");
    CHECK(r.exit_code == 0);
    const json out = parse(r);
    REQUIRE(out.is_array());
    CHECK(out.size() == 6);
    for (const auto& entry : out) {
        CHECK(entry.at("exact") == true);
        CHECK(entry.at("zero") == true);
    }
}

TEST_CASE("basis lists the certified degrees") {
    const RunResult r = run_cli("basis -n 6 --node 6 5 1 --mmax 6");
    CHECK(r.exit_code == 0);
    const json out = parse(r);
    CHECK(out.at("degrees") == json::array({2, 3, 4, 6}));
    CHECK(out.at("certified") == true);
}

TEST_CASE("twoterm splits the T_6 example") {
    const RunResult r = run_cli("twoterm -n 6 --node 6 5 1 -q dT3+dT2");
    CHECK(r.exit_code == 0);
    const json out = parse(r);
    CHECK(out.at("d1") == 3);
    CHECK(out.at("A") == "0,1");
    CHECK(out.at("d2") == 2);
    CHECK(out.at("B") == "0,1");
    CHECK(out.at("constant") == "1");
}

TEST_CASE("twoterm refuses non-members with exit 1") {
    const RunResult r = run_cli("twoterm -n 6 --node 6 5 1 -q dT5");
    CHECK(r.exit_code == 1);
    CHECK(parse(r).at("error") == "not_a_member");
}

TEST_CASE("compcheck finds witnesses for the single terms but not the sum") {
    const RunResult single = run_cli("compcheck -n 6 --node 6 5 1 -q T2");
    CHECK(single.exit_code == 0);
    const json sj = parse(single);
    CHECK(sj.at("found") == true);
    CHECK(sj.at("witness").at("w") == 2);

    const RunResult sum = run_cli("compcheck -n 6 --node 6 5 1 -q T3+T2");
    CHECK(sum.exit_code == 1);
    const json out = parse(sum);
    CHECK(out.at("found") == false);
    CHECK(out.at("transcript").size() == 3);
}

TEST_CASE("counterexample reproduces q = T_3' + T_2'") {
    const RunResult r = run_cli("counterexample -n 6 --node 6 5 1");
    CHECK(r.exit_code == 0);
    const json out = parse(r);
    CHECK(out.at("found") == true);
    CHECK(out.at("m1") == 2);
    CHECK(out.at("m2") == 3);
    CHECK(out.at("member").at("verdict") == "member");
    const chebmom::RatPoly q = chebmom::parse_coeff_list(out.at("q").get<std::string>());
    CHECK(q == chebmom::derivative(chebmom::chebyshev(3)) +
                   chebmom::derivative(chebmom::chebyshev(2)));

    CHECK(run_cli("counterexample --node 4 0 2").exit_code == 1);
}

TEST_CASE("monodromy prints the permutations and the product check") {
    const RunResult r = run_cli("monodromy -n 6");
    CHECK(r.exit_code == 0);
    const json out = parse(r);
    CHECK(out.at("piinf") == json::array({1, 2, 3, 4, 5, 0}));
    CHECK(out.at("pim1") == json::array({5, 4, 3, 2, 1, 0}));
    CHECK(out.at("pi1") == json::array({0, 5, 4, 3, 2, 1}));
    CHECK(out.at("product_ok") == true);
}

TEST_CASE("check5 passes members and flags violators") {
    const RunResult member = run_cli("check5 -n 6 --node 6 5 1 -q T3+T2");
    CHECK(member.exit_code == 0);
    const json mj = parse(member);
    CHECK(mj.at("pass") == true);
    CHECK(mj.at("residuals").size() == 20);

    const RunResult violator = run_cli("check5 -n 6 --node 6 5 1 -q T5");
    CHECK(violator.exit_code == 1);
    const json vj = parse(violator);
    CHECK(vj.at("pass") == false);
    CHECK(vj.at("max").get<double>() > 1e-3);
}

TEST_CASE("usage and validation failures exit 2") {
    CHECK(run_cli("member -n 6 -q dT5").exit_code == 2);                    // no pair
    CHECK(run_cli("member -n 6 --node 6 2 1 -q dT5").exit_code == 2);       // parity
    CHECK(run_cli("member -n 5 --node 6 5 1 -q dT5").exit_code == 2);       // n mismatch
    CHECK(run_cli("member -n 6 --node 6 5 1 -q bogus").exit_code == 2);     // bad poly
    CHECK(run_cli("member -n 6 --node 6 5 1 --rational 1 2 -q dT5").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code != 0);
}

TEST_CASE("every JSON output parses and re-emits to the same document") {
    const char* commands[] = {
        "member -n 6 --node 6 5 1 -q dT3+dT2",
        "member -n 6 --node 6 5 1 -q dT5",
        "basis -n 6 --node 6 5 1",
        "moments -n 6 --node 6 5 1 -q dT3+dT2 --imax 3",
        "twoterm -n 6 --node 6 5 1 -q dT3+dT2",
        "compcheck -n 6 --node 6 5 1 -q T3+T2",
        "counterexample -n 6 --node 6 5 1",
        "monodromy -n 6",
        "check5 -n 6 --node 6 5 1 -q T3+T2",
    };
    for (const char* command : commands) {
        const RunResult r = run_cli(command);
        const json first = json::parse(r.out);
        const json second = json::parse(first.dump());
        CHECK(first == second);
    }
}

TEST_CASE("rational and numeric pair syntaxes reach the same verdict") {
    const RunResult rational = run_cli("member -n 6 --rational 1/2 -1/2 -q dT2");
    CHECK(rational.exit_code == 0);
    CHECK(parse(rational).at("certified") == true);

    const RunResult numeric =
        run_cli("member -n 6 --numeric 0.8660254037844386,0 -0.8660254037844386,0 -q dT2");
    CHECK(numeric.exit_code == 0);
    CHECK(parse(numeric).at("certified") == false);

    const RunResult shift = run_cli("member --shift 6 3 0.3,0.4 -q dT2");
    CHECK(shift.exit_code == 0);
    CHECK(parse(shift).at("certified") == true);
}
