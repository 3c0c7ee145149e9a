#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebmom/chebyshev.hpp"
#include "chebmom/moment_space.hpp"
#include "chebmom/moments.hpp"
#include "chebmom/monodromy.hpp"
#include "chebmom/points.hpp"
#include "chebmom/poly_text.hpp"
#include "chebmom/representation.hpp"

namespace {

using chebmom::PointPair;
using chebmom::Rat;
using chebmom::RatPoly;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return {std::stod(text), 0.0};
        }
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("bad complex literal '" + text + "' (expected RE or RE,IM)");
    }
}

// Pair flags shared by every pair-based subcommand.
struct PairOptions {
    std::vector<long> node;        // N P Q
    std::vector<std::string> rational;  // A B
    std::vector<std::string> numeric;   // RE_A,IM_A RE_B,IM_B
    std::vector<std::string> shift;     // N K RE_V,IM_V
    bool inverted = false;
    double tol = 1e-9;

    void attach(CLI::App* cmd) {
        cmd->add_option("--node", node, "node pair: N P Q for a=cos(P*pi/N), b=cos(Q*pi/N)")
            ->expected(3);
        cmd->add_option("--rational", rational, "rational pair: A B (exact rationals)")->expected(2);
        cmd->add_option("--numeric", numeric, "numeric pair: RE_A,IM_A RE_B,IM_B")->expected(2);
        cmd->add_option("--shift", shift, "shift pair: N K RE_V,IM_V")->expected(3);
        cmd->add_flag("--inverted", inverted, "shift pair uses w = eps_n^k / v");
        cmd->add_option("--tol", tol, "tolerance for numeric decisions")->default_val(1e-9);
    }

    PointPair build() const {
        const int given = !node.empty() + !rational.empty() + !numeric.empty() + !shift.empty();
        if (given != 1) {
            throw UsageError("exactly one of --node, --rational, --numeric, --shift is required");
        }
        if (!node.empty()) {
            if (node[0] <= 0) {
                throw UsageError("--node needs N >= 1");
            }
            return chebmom::NodePair{static_cast<unsigned>(node[0]), node[1], node[2]};
        }
        if (!rational.empty()) {
            return chebmom::RationalPair{chebmom::parse_rational(rational[0]),
                                         chebmom::parse_rational(rational[1])};
        }
        if (!numeric.empty()) {
            return chebmom::NumericPair{parse_complex(numeric[0]), parse_complex(numeric[1]), tol};
        }
        long sn = 0, sk = 0;
        try {
            sn = std::stol(shift[0]);
            sk = std::stol(shift[1]);
        } catch (const std::exception&) {
            throw UsageError("--shift needs integer N and K");
        }
        if (sn <= 0) {
            throw UsageError("--shift needs N >= 1");
        }
        return chebmom::ShiftPair{static_cast<unsigned>(sn), sk, inverted, parse_complex(shift[2]),
                                  true};
    }
};

unsigned resolve_n(const PointPair& pair, int n_flag) {
    const std::optional<unsigned> builtin = chebmom::intrinsic_n(pair);
    if (n_flag <= 0) {
        if (!builtin) {
            throw UsageError("-n is required for this pair model");
        }
        return *builtin;
    }
    if (builtin && *builtin != static_cast<unsigned>(n_flag)) {
        throw UsageError("-n disagrees with the pair's N");
    }
    return static_cast<unsigned>(n_flag);
}

json poly_json(const RatPoly& p) {
    return chebmom::format_coeff_list(p);
}

json complex_json(std::complex<double> z) {
    return json::array({z.real(), z.imag()});
}

json moment_json(unsigned i, const chebmom::MomentValue& m, double tol) {
    json out;
    out["i"] = i;
    if (const auto* r = std::get_if<Rat>(&m.raw())) {
        out["value"] = chebmom::to_string(*r);
    } else {
        out["value"] = complex_json(m.approx());
    }
    out["exact"] = m.exact();
    out["zero"] = m.is_zero(tol);
    return out;
}

json verdict_json(const chebmom::MembershipVerdict& v, double tol) {
    json out;
    out["schema"] = 1;
    out["verdict"] = v.member ? "member" : "non_member";
    json cert = json::array();
    for (const auto& entry : v.certificate) {
        cert.push_back({{"m", entry.m}, {"c", chebmom::to_string(entry.c)}, {"d", entry.d}});
    }
    out["certificate"] = cert;
    out["violations"] = v.violations;
    if (v.witness) {
        out["witness"] = moment_json(v.witness->first, v.witness->second, tol);
    }
    out["certified"] = v.certified;
    return out;
}

json probes_json(const std::vector<chebmom::DivisorProbe>& transcript) {
    json out = json::array();
    for (const auto& probe : transcript) {
        out.push_back({{"w", probe.w},
                       {"endpoint_equal", probe.endpoint_equal},
                       {"decomposable", probe.decomposable},
                       {"offending", probe.offending}});
    }
    return out;
}

void emit(const json& out, const std::string& format, const std::string& text_summary) {
    if (format == "text") {
        std::cout << text_summary << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
}

struct CommonOptions {
    int n = 0;
    std::string poly;
    unsigned i_max = 24;
    long m_max = -1;
    unsigned precision = 128;
    unsigned samples = 20;
    double accept = 1e-8;
    std::string format = "json";
};

int run(int argc, char** argv) {
    CLI::App app{"exact decision toolkit for polynomials orthogonal to all powers of a "
                 "Chebyshev polynomial on a segment"};
    app.require_subcommand(1);

    CommonOptions opt;
    PairOptions pair_opt;

    auto add_common = [&](CLI::App* cmd, bool wants_pair, bool wants_poly) {
        cmd->add_option("-n,--degree", opt.n, "degree n of T_n");
        cmd->add_option("--format", opt.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}))
            ->default_val("json");
        if (wants_pair) {
            pair_opt.attach(cmd);
        }
        if (wants_poly) {
            cmd->add_option("-q,--poly", opt.poly,
                            "polynomial: coefficient list \"c0,c1,...\" or sugar like dT3+dT2")
                ->required();
        }
        return cmd;
    };

    auto* basis_cmd = add_common(app.add_subcommand("basis", "basis degrees of the moment space"),
                                 true, false);
    basis_cmd->add_option("--mmax", opt.m_max, "largest degree to report (default 3n)");

    auto* member_cmd = add_common(
        app.add_subcommand("member", "decide membership of q with certificate"), true, true);
    member_cmd->add_option("--imax", opt.i_max, "witness search bound")->default_val(24);

    auto* moments_cmd = add_common(
        app.add_subcommand("moments", "moment sweep for q"), true, true);
    moments_cmd->add_option("--imax", opt.i_max, "largest power of T_n")->default_val(24);
    moments_cmd->add_option("--precision", opt.precision, "working precision in bits")
        ->default_val(128);

    add_common(app.add_subcommand("twoterm", "two-term representation of int q dz"), true, true);

    add_common(app.add_subcommand("compcheck",
                                  "search a composition witness for Q (give Q via -q)"),
               true, true);

    add_common(app.add_subcommand("counterexample",
                                  "member q whose primitive defeats the composition condition"),
               true, false);

    add_common(app.add_subcommand("monodromy", "branch permutations of T_n"), false, false);

    auto* check5_cmd = add_common(
        app.add_subcommand("check5", "branch-sum residuals for Q (give Q via -q)"), true, true);
    check5_cmd->add_option("--samples", opt.samples, "sample count on the segment")
        ->default_val(20);
    check5_cmd->add_option("--precision", opt.precision, "working precision in bits")
        ->default_val(128);
    check5_cmd->add_option("--accept", opt.accept, "largest residual accepted as pass")
        ->default_val(1e-8);

    CLI11_PARSE(app, argc, argv);
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();

    if (name == "monodromy") {
        if (opt.n <= 0) {
            throw UsageError("-n is required");
        }
        const auto p = chebmom::perms(static_cast<unsigned>(opt.n));
        const bool product_ok =
            (p.around_infinity * p.around_minus_one * p.around_one).is_identity();
        json out{{"schema", 1},
                 {"n", opt.n},
                 {"pi1", p.around_one.images()},
                 {"pim1", p.around_minus_one.images()},
                 {"piinf", p.around_infinity.images()},
                 {"cycles",
                  {{"pi1", p.around_one.cycle_string()},
                   {"pim1", p.around_minus_one.cycle_string()},
                   {"piinf", p.around_infinity.cycle_string()}}},
                 {"product_ok", product_ok}};
        emit(out, opt.format,
             "pi1 = " + p.around_one.cycle_string() + "\npim1 = " + p.around_minus_one.cycle_string() +
                 "\npiinf = " + p.around_infinity.cycle_string() +
                 "\nproduct_ok = " + (product_ok ? "true" : "false"));
        return product_ok ? kExitOk : kExitNegative;
    }

    const PointPair pair = pair_opt.build();
    const unsigned n = resolve_n(pair, opt.n);
    chebmom::validate(pair, n);

    if (name == "basis") {
        const unsigned m_max = opt.m_max < 0 ? 3 * n : static_cast<unsigned>(opt.m_max);
        const auto degrees = chebmom::basis_degrees(n, pair, m_max);
        json out{{"schema", 1},
                 {"n", n},
                 {"pair", chebmom::describe(pair)},
                 {"m_max", m_max},
                 {"degrees", degrees},
                 {"certified", chebmom::is_exact_pair(pair)}};
        std::string text = "basis degrees up to " + std::to_string(m_max) + ":";
        for (unsigned m : degrees) {
            text += " " + std::to_string(m);
        }
        emit(out, opt.format, text);
        return kExitOk;
    }

    if (name == "member") {
        const RatPoly q = chebmom::parse_poly_spec(opt.poly);
        const auto verdict = chebmom::is_member(n, q, pair, opt.i_max);
        json out = verdict_json(verdict, pair_opt.tol);
        out["n"] = n;
        out["pair"] = chebmom::describe(pair);
        out["q"] = poly_json(q);
        emit(out, opt.format,
             std::string(verdict.member ? "member" : "non-member") +
                 (verdict.certified ? " (certified)" : " (numeric)"));
        return verdict.member ? kExitOk : kExitNegative;
    }

    if (name == "moments") {
        const RatPoly q = chebmom::parse_poly_spec(opt.poly);
        const auto sweep = chebmom::moment_sweep(n, q, pair, opt.i_max, opt.precision);
        json out = json::array();
        std::string text;
        for (unsigned i = 0; i < sweep.size(); ++i) {
            out.push_back(moment_json(i, sweep[i], pair_opt.tol));
            text += "i=" + std::to_string(i) + (sweep[i].is_zero(pair_opt.tol) ? " zero" : " nonzero") + "\n";
        }
        emit(out, opt.format, text);
        return kExitOk;
    }

    if (name == "twoterm") {
        const RatPoly q = chebmom::parse_poly_spec(opt.poly);
        try {
            const auto rep = chebmom::two_term(n, q, pair);
            json out{{"schema", 1},
                     {"d1", rep.d1},
                     {"A", poly_json(rep.A)},
                     {"d2", rep.d2},
                     {"B", poly_json(rep.B)},
                     {"constant", chebmom::to_string(rep.constant)},
                     {"certified", true}};
            emit(out, opt.format,
                 "int q dz = A(T_" + std::to_string(rep.d1) + ") + B(T_" + std::to_string(rep.d2) +
                     ") + c with A = " + chebmom::pretty(rep.A) + ", B = " + chebmom::pretty(rep.B) +
                     ", c = " + chebmom::to_string(rep.constant));
            return kExitOk;
        } catch (const chebmom::NotAMember& e) {
            json out{{"schema", 1}, {"error", "not_a_member"}, {"detail", e.what()}};
            emit(out, opt.format, std::string("not a member: ") + e.what());
            return kExitNegative;
        }
    }

    if (name == "compcheck") {
        const RatPoly big_q = chebmom::parse_poly_spec(opt.poly);
        std::vector<chebmom::DivisorProbe> transcript;
        const auto witness = chebmom::composition_condition(n, big_q, pair, &transcript);
        json out{{"schema", 1}, {"found", witness.has_value()}, {"transcript", probes_json(transcript)}};
        if (witness) {
            out["witness"] = {{"w", witness->w},
                              {"outer", poly_json(witness->outer)},
                              {"inner_image", poly_json(witness->inner_image)}};
        }
        emit(out, opt.format,
             witness ? "composition witness at w = " + std::to_string(witness->w)
                     : "no composition witness");
        return witness ? kExitOk : kExitNegative;
    }

    if (name == "counterexample") {
        const auto found = chebmom::counterexample(n, pair);
        json out{{"schema", 1}, {"found", found.has_value()}};
        if (found) {
            out["q"] = poly_json(found->q);
            out["m1"] = found->m1;
            out["m2"] = found->m2;
            out["member"] = verdict_json(found->member_proof, pair_opt.tol);
            out["transcript"] = probes_json(found->transcript);
        }
        emit(out, opt.format,
             found ? "q = dT" + std::to_string(found->m1) + " + dT" + std::to_string(found->m2)
                   : "no counterexample for this pair");
        return found ? kExitOk : kExitNegative;
    }

    if (name == "check5") {
        const RatPoly big_q = chebmom::parse_poly_spec(opt.poly);
        std::vector<double> residuals;
        const double max_residual =
            chebmom::check_condition5(n, big_q, pair, opt.samples, opt.precision, &residuals);
        const bool pass = max_residual <= opt.accept;
        json out{{"schema", 1},
                 {"residuals", residuals},
                 {"max", max_residual},
                 {"threshold", opt.accept},
                 {"pass", pass}};
        emit(out, opt.format,
             "max residual " + std::to_string(max_residual) + (pass ? " (pass)" : " (violation)"));
        return pass ? kExitOk : kExitNegative;
    }

    throw UsageError("unknown subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chebmom::InvalidPair& e) {
        std::cerr << "invalid pair: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chebmom::NonExactPair& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
