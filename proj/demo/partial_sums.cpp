// Partial sums of the S^4 and SU(3) localization series, evaluated on a few points.
#include <iostream>

#include "dhloc/models.hpp"

using namespace dhloc;

int main() {
    Model s4 = builtin_s4();
    auto sum = partial_sum(s4, Box{Vec{frac(-13, 5)}, Vec{frac(18, 5)}});
    std::cout << "S^4, " << sum.terms().size() << " terms on [-13/5, 18/5]\n";
    for (const auto& t : sum.terms()) std::cout << "  " << to_string(t) << "\n";
    for (long x = -5; x <= 7; x += 2) {
        Vec p{frac(x, 2)};
        std::cout << "  f(" << to_string(p[0]) << ") = " << to_string(density_at(sum, p)) << "\n";
    }

    Model su3 = builtin_woodward_su3();
    for (std::size_t n : {6, 12}) {
        auto d = nearest_sum(su3, n);
        std::cout << "SU(3), nearest " << n << " contributions\n";
        for (const Vec& p : {Vec{frac(1, 3), frac(1, 3)}, Vec{frac(2, 3), frac(2, 3)}, Vec{frac(4, 3), frac(1, 3)}})
            std::cout << "  f" << to_string(p) << " = " << to_string(density_at(d, p)) << "\n";
    }
}
