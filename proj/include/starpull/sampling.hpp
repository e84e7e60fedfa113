#pragma once

// Seeded samplers for ideals of R, D and T.  The bounded draw is done by hand
// so that a seed gives the same sequence with every standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "starpull/pullback.hpp"
#include "starpull/report.hpp"
#include "starpull/star_ops.hpp"

namespace starpull {

class Rng
{
    std::mt19937_64 eng_;

  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw precondition_error("empty range");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = eng_();
        while (x >= limit);
        return x % n;
    }
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }
};

inline FieldElem sample_rational(Rng& rng, long height, bool integral)
{
    long a = rng.between(-height, height);
    long b = integral || rng.chance(2, 3) ? 1 : rng.between(1, height);
    return FieldElem(mpq_class(a, b));
}

/// Random element of k of bounded height.
inline FieldElem sample_scalar(Rng& rng, const PullbackInstance& inst, long height, bool integral = false)
{
    FieldElem x = sample_rational(rng, height, integral);
    if (inst.tag() != 1 && rng.chance(1, 2))
        x = x + sample_rational(rng, height, integral) * FieldElem::sqrt_of(inst.tag());
    return x.with_tag(inst.tag());
}

inline FieldElem nonzero_scalar(Rng& rng, const PullbackInstance& inst, long height, bool integral = false)
{
    for (;;) {
        FieldElem x = sample_scalar(rng, inst, height, integral);
        if (!x.is_zero())
            return x;
    }
}

inline Poly sample_poly(Rng& rng, const PullbackInstance& inst, const SampleParams& p)
{
    for (;;) {
        std::vector<FieldElem> c;
        long deg = rng.between(0, p.max_degree);
        for (long i = 0; i <= deg; ++i)
            c.push_back(sample_scalar(rng, inst, p.height, i == 0 && rng.chance(1, 2)));
        Poly f(c, inst.tag());
        if (!f.is_zero())
            return f;
    }
}

/// Random nonzero element of K(X); a third of them carry a small denominator.
inline RatFunc sample_element(Rng& rng, const PullbackInstance& inst, const SampleParams& p)
{
    Poly n = sample_poly(rng, inst, p);
    if (!rng.chance(1, 3))
        return RatFunc(n);
    Poly den = rng.chance(1, 2) ? Poly::x(inst.tag())
                                : Poly(std::vector<FieldElem>{FieldElem(rng.between(1, 3)), FieldElem(1)}, inst.tag());
    return RatFunc(n, den);
}

/// Fixed ideals every sample list starts with.
inline std::vector<RawIdeal> corner_ideals(const PullbackInstance& inst)
{
    RatFunc X = RatFunc::x();
    RatFunc one(1), two(2);
    std::vector<RawIdeal> out{
        RawIdeal({X}),
        RawIdeal({two, X}),
        RawIdeal({(X + RatFunc(3)) / two}),                // principal
        RawIdeal({X * two, X * X}),                         // inside M, content X
        RawIdeal({(X + one) * two, (X + one) * X}),         // content X + 1
        RawIdeal({X * X, X * X * X + X * X * X * X}),
    };
    if (inst.tag() != 1)
        out.push_back(RawIdeal({one, RatFunc(FieldElem::sqrt_of(inst.tag()))}));
    if (inst.D().kind() == DomainKind::quadratic_order)
        out.push_back(RawIdeal({two, RatFunc(FieldElem(1) + FieldElem::sqrt_of(inst.tag()))}));
    return out;
}

/// Deterministic list of max(count, 2) finitely generated ideals: the corners, then random ones.
inline std::vector<RawIdeal> sample_ideals(const PullbackInstance& inst, const SampleParams& p)
{
    p.validate();
    Rng rng(p.seed);
    std::vector<RawIdeal> out = corner_ideals(inst);
    std::size_t want = std::max<std::size_t>(static_cast<std::size_t>(p.count), 2);
    if (out.size() > want)
        out.resize(want);
    while (out.size() < want) {
        std::vector<RatFunc> g;
        long n = rng.between(1, p.max_generators);
        for (long i = 0; i < n; ++i)
            g.push_back(sample_element(rng, inst, p));
        out.push_back(RawIdeal(g));
    }
    return out;
}

/// Nonzero fractional ideals of D (inside the quotient field of D).
inline std::vector<ExtDModule> sample_d_ideals(const PullbackInstance& inst, const SampleParams& p)
{
    p.validate();
    Rng rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
    const auto& D = inst.D();
    std::vector<ExtDModule> out;
    if (D.kind() == DomainKind::quadratic_order) {
        for (const auto& l : D.class_group().representatives())
            out.push_back(dmod_from_generators(quadratic::elements(l, inst.tag()), D));
    }
    out.push_back(ExtDModule::unit(D));
    while (out.size() < static_cast<std::size_t>(p.count)) {
        std::vector<FieldElem> g;
        long n = D.kind() == DomainKind::quadratic_order ? rng.between(1, 2) : 1;
        for (long i = 0; i < n; ++i) {
            FieldElem x = D.kind() == DomainKind::quadratic_order ? nonzero_scalar(rng, inst, p.height, true)
                                                                  : FieldElem(sample_rational(rng, p.height, false));
            if (x.is_zero())
                x = FieldElem(1);
            g.push_back(x.with_tag(inst.tag()));
        }
        ExtDModule J = dmod_from_generators(g, D);
        if (rng.chance(1, 3))
            J = dmod_scale(FieldElem(mpq_class(1, rng.between(2, 5))), J, D);
        out.push_back(J);
    }
    out.resize(static_cast<std::size_t>(p.count));
    return out;
}

inline std::vector<TIdeal> sample_t_ideals(const PullbackInstance& inst, const SampleParams& p)
{
    p.validate();
    Rng rng(p.seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::vector<TIdeal> out;
    while (out.size() < static_cast<std::size_t>(p.count))
        out.push_back(make_T_ideal(sample_element(rng, inst, p), inst));
    return out;
}

/// Hulls of the raw samples followed by M, T and a few inverse images.
inline std::vector<StructuredIdeal> sample_structured(const PullbackInstance& inst, const SampleParams& p)
{
    std::vector<StructuredIdeal> out;
    out.push_back(conductor(inst));
    out.push_back(whole_T(inst));
    out.push_back(scale(RatFunc(1) + RatFunc::x(), whole_T(inst), inst));
    SampleParams q = p;
    q.count = std::max(2, p.count / 4);
    for (const auto& J : sample_d_ideals(inst, q))
        out.push_back(inverse_image_R(J, inst));
    for (const auto& I : sample_ideals(inst, p)) {
        if (out.size() >= static_cast<std::size_t>(p.count))
            break;
        out.push_back(structured_hull(I, inst));
    }
    out.resize(std::min(out.size(), static_cast<std::size_t>(std::max(p.count, 2))));
    return out;
}

/// Fixed scalars for the (zE)* = zE* checks.
inline std::vector<RatFunc> sample_scalars(const PullbackInstance& inst)
{
    RatFunc X = RatFunc::x();
    std::vector<RatFunc> z{RatFunc(2), RatFunc(FieldElem(mpq_class(-3, 2))), X, (RatFunc(1) + X) / RatFunc(3), X.inv()};
    if (inst.tag() != 1)
        z.push_back(RatFunc(FieldElem(1) + FieldElem::sqrt_of(inst.tag())));
    return z;
}

template <class V>
std::vector<IdealValue> as_values(const std::vector<V>& v)
{
    return {v.begin(), v.end()};
}

} // namespace starpull
