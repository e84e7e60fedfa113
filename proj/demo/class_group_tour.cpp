// Walks the class group of R = O_K + X K[X] for a few imaginary quadratic K:
// lifts each ideal class of O_K to R, reads it back, and checks that
// multiplying lifted ideals adds their class labels.

#include <iostream>

#include "starpull.hpp"

using namespace starpull;

int main(int argc, char** argv)
{
    std::vector<long> ds{-5, -14, -23};
    if (argc > 1) {
        ds.clear();
        for (int i = 1; i < argc; ++i)
            ds.push_back(std::stol(argv[i]));
    }
    for (long d : ds) {
        PullbackInstance I = make_instance(InstanceConfig{"", "quadratic", d, "poly"});
        std::cout << I.describe() << "\n";
        auto reps = d_class_representatives(I);
        std::vector<StructuredIdeal> lifted;
        for (const auto& J : reps) {
            auto H = alpha(J, I);
            lifted.push_back(H);
            auto g = is_principal_R(H, I);
            std::cout << "  " << to_expr(J, I.D()) << "\n      lifts to " << to_string(H, I) << "\n      class "
                      << gamma(H, I).to_string() << (g ? ", principal, generated by " + g->to_string() : "") << "\n";
        }
        bool additive = true;
        for (std::size_t a = 0; a < lifted.size(); ++a)
            for (std::size_t b = 0; b < lifted.size(); ++b) {
                auto prod = star_eval_R(StarOp::t(Side::R), ideal_mul(lifted[a], lifted[b], I), I);
                additive &= gamma(prod, I) == gamma(lifted[a], I) + gamma(lifted[b], I);
            }
        std::cout << "  products of lifts add class labels: " << (additive ? "yes" : "no") << "\n\n";
    }
}
