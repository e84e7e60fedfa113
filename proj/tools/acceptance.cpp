// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "starpull/cli/evaluator.hpp"
#include "starpull/harness.hpp"

using namespace starpull;

namespace {

PullbackInstance inst(const char* n) { return make_instance(InstanceConfig{n}); }

SampleParams params(int count, std::uint64_t seed = 1)
{
    SampleParams p;
    p.count = count;
    p.seed = seed;
    return p;
}

const StarOp tR = StarOp::t(Side::R);

struct Check {
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
            problems.push_back(what);
    }
    void report(const Report& r, const std::string& what)
    {
        if (!r.pass())
            problems.push_back(what + ": " + std::to_string(r.violations.size()) + " violations, first: " +
                               r.violations.front().expected + " / " + r.violations.front().got);
    }
    // runs f and requires it to finish inside the budget
    template <class F> void timed(double budget, const std::string& what, F f)
    {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > budget) {
            std::ostringstream o;
            o << what << " took " << std::fixed << std::setprecision(1) << s << " s (budget " << budget << " s)";
            problems.push_back(o.str());
        }
    }
};

// P = (2, 1 + sqrt(-5)) in Z[sqrt(-5)]
ExtDModule prime_over_two(const PullbackInstance& C)
{
    return dmod_from_generators({FieldElem(2), FieldElem(1, 1, -5)}, C.D());
}

// no a + b sqrt(-5) has norm a^2 + 5 b^2 = 2, so P is not principal
bool norm_two_exists()
{
    for (int a = -2; a <= 2; ++a)
        for (int b = -1; b <= 1; ++b)
            if (a * a + 5 * b * b == 2)
                return true;
    return false;
}

void lifted_prime_checks(Check& c, const PullbackInstance& C)
{
    const auto P = prime_over_two(C);
    const auto a = alpha(P, C);
    c.require(!norm_two_exists(), "norm oracle");
    c.require(a == inverse_image_R(P, C), "alpha(P) is the preimage of P");
    c.require(!is_principal_R(a, C), "alpha(P) non-principal");
    c.require(ideal_mul(a, a, C) == principal_ideal(RatFunc(2), C), "alpha(P)^2 = 2R");
    auto w = invertibility_R(a, tR, C);
    c.require(w.certificate == Certificate::invertible && w.replay(C), "alpha(P) certified invertible");
    c.require(!gamma(a, C).is_identity(), "gamma(alpha(P)) nontrivial");
    c.require(gamma(a, C) == d_label(P, C), "gamma(alpha(P)) = [P]");
    c.require(gamma(unit_ideal(C), C).is_identity(), "gamma(R) trivial");
    c.require(beta(a, C) == make_T_ideal(RatFunc(1), C), "beta(alpha(P)) = T");
}

std::vector<std::string> criterion_split()
{
    Check c;
    auto C = inst("C");
    c.timed(10, "split-exact on C", [&] {
        auto r = verify_split_exact(C, tR, params(100));
        c.report(r, "split-exact on C");
        const auto& cl = r.details["classes"];
        c.require(cl.size() == 2, "two classes");
        for (const auto& k : cl)
            c.require(k["principal"].get<bool>() == (k["order"].get<int>() == 1), "principal iff trivial class");
        c.require(r.details["invertible_samples"] == r.details["kernel_captured"], "kernel capture on every sample");
        c.require(r.details["invertible_samples"].get<int>() > 0, "some invertible samples");
        lifted_prime_checks(c, C);
    });
    return c.problems;
}

std::vector<std::string> criterion_quasilocal()
{
    Check c;
    for (const char* n : {"B", "E"}) {
        std::string what = std::string("quasilocal-iso on ") + n;
        c.timed(10, what, [&] {
            auto r = verify_quasilocal_iso(inst(n), tR, params(100));
            c.report(r, what);
            c.require(r.details["invertible_samples"].get<int>() > 0, what + ": invertible samples");
            c.require(r.details["invertible_samples"] == r.details["principal_samples"], what + ": all principal");
            if (std::string(n) == "E")
                c.require(r.details["proper_subfield"].get<bool>(), "E is the proper-subfield case");
        });
    }
    return c.problems;
}

std::vector<std::string> criterion_pvmd()
{
    Check c;
    c.timed(10, "pvmd on A and D", [&] {
        auto ra = verify_pvmd(inst("A"), tR, params(100));
        c.report(ra, "pvmd on A");
        c.require(ra.details["invertible_samples"] == 100, "A: 100/100 t-invertible");
        c.require(ra.details["structural"]["pvmd"].get<bool>(), "A structurally a PvMD");

        auto D = inst("D");
        auto rd = verify_pvmd(D, tR, params(100));
        c.report(rd, "pvmd on D");
        c.require(!rd.details["structural"]["pvmd"].get<bool>(), "D structurally not a PvMD");
        const auto& w = rd.details["witness"];
        c.require(!w.is_null() && w["ideal"] == "ideal(1, (sqrt(-1)))", "D: witness (1, i)");
        c.require(!w.is_null() && w["closure_is_M"].get<bool>(), "D: closure is M");
        c.require(!w.is_null() && w["generator_degree"].get<int>() <= 1, "D: witness degree <= 1");
        c.require(!w.is_null() && w["oracle_certificate"] != "none", "D: oracle confirms");

        // hand check: (R:(1, i)) = M, so (I I^-1)^t = M
        auto I = structured_hull(RawIdeal({RatFunc(1), RatFunc(FieldElem::sqrt_of(-1))}), D);
        c.require(colon_R(I, D) == conductor(D), "(R:(1, i)) = M");
        c.require(star_eval_R(tR, ideal_mul(I, colon_R(I, D), D), D) == conductor(D), "((1, i)(1, i)^-1)^t = M");
    });
    return c.problems;
}

std::vector<std::string> criterion_t_structure()
{
    Check c;
    c.timed(5, "t-structure on A..E", [&] {
        for (const auto& I : catalogue()) {
            auto r = verify_t_structure(I, params(100));
            c.report(r, "t-structure on " + I.name());
            c.require(r.details["ops_fixing_M"].size() >= 10, I.name() + ": ten ops fix M");
        }
    });
    return c.problems;
}

std::vector<std::string> criterion_pic()
{
    Check c;
    auto C = inst("C");
    auto rc = verify_pic_splitting(C, params(100));
    c.report(rc, "pic-splitting on C");
    c.require(rc.details["principal_samples"].get<int>() < rc.details["invertible_samples"].get<int>(),
              "C: a non-principal invertible sample");
    lifted_prime_checks(c, C);
    for (const char* n : {"A", "B"}) {
        auto r = verify_pic_splitting(inst(n), params(100));
        c.report(r, std::string("pic-splitting on ") + n);
        c.require(r.details["principal_samples"] == r.details["invertible_samples"],
                  std::string(n) + ": every invertible sample principal");
    }
    return c.problems;
}

std::vector<std::string> criterion_oracle()
{
    Check c;
    for (const char* n : {"A", "C", "D"}) {
        auto r = verify_oracle_agreement(inst(n), params(200));
        c.report(r, std::string("oracle-agreement on ") + n);
        c.require(r.n_samples == 200, std::string(n) + ": 200 samples");
    }
    return c.problems;
}

std::vector<std::string> criterion_star_algebra()
{
    Check c;
    for (const auto& I : catalogue())
        c.report(verify_star_algebra(I, params(50)), "star-algebra on " + I.name());
    return c.problems;
}

std::vector<std::string> criterion_determinism()
{
    Check c;
    for (const auto& name : suite_names())
        for (const auto& I : catalogue()) {
            try {
                auto a = run_suite(name, I, tR, params(15, 7)).to_json().dump();
                auto b = run_suite(name, I, tR, params(15, 7)).to_json().dump();
                c.require(a == b, name + " on " + I.name() + " reproducible");
            } catch (const precondition_error&) {
                // suite does not apply to this instance
            }
        }
    int round_trips = 0;
    for (const auto& I : catalogue())
        for (const auto& raw : sample_ideals(I, params(100, 8))) {
            cli::Value v{structured_hull(raw, I)};
            auto back = cli::evaluate(v.to_expr(I), I);
            c.require(std::holds_alternative<StructuredIdeal>(back.data) &&
                          std::get<StructuredIdeal>(back.data) == std::get<StructuredIdeal>(v.data),
                      "round trip of " + v.to_expr(I) + " on " + I.name());
            ++round_trips;
        }
    c.require(round_trips == 500, "500 round trips");
    return c.problems;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::vector<std::string>()>>> criteria{
        {"split exact sequence on C", criterion_split},
        {"quasilocal isomorphism on B and E", criterion_quasilocal},
        {"PvMD characterization on A and D", criterion_pvmd},
        {"t-structure on all instances", criterion_t_structure},
        {"Picard splitting on C, A, B", criterion_pic},
        {"oracle agreement on A, C, D", criterion_oracle},
        {"star-operation algebra", criterion_star_algebra},
        {"determinism and round trip", criterion_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> problems;
        try {
            problems = criteria[i].second();
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (problems.empty() ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << s << " s)";
        if (!problems.empty())
            std::cout << ": " << problems.front() << (problems.size() > 1 ? " (+" + std::to_string(problems.size() - 1) + " more)" : "");
        std::cout << "\n" << std::flush;
        failed += !problems.empty();
    }
    return failed ? 1 : 0;
}
