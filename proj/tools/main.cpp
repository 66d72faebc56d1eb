#include "stdbases/graded.hpp"
#include "stdbases/hilbert.hpp"
#include "stdbases/ideal_ops.hpp"
#include "stdbases/parse.hpp"

#include <iostream>

using namespace stdbases;

int main() {
    RingDescriptor ring({"x", "y", "z"});
    auto P = [&](const char* s) { return parse_form(s, ring); };

    std::cout << "parse/print: " << P("x^2*y - y^2*z").to_string() << "\n";
    std::cout << "3/2 scale:   " << P("x^2*y").scaled(Rational(3, 2)).to_string() << "\n";

    Ideal quartet(ring, {P("x^2*y"), P("y^2*z"), P("x*z^2"), P("x*y*z")});
    std::cout << "GB size: " << quartet.groebner().size() << "\n";
    std::cout << "member f*x: " << ideal_member(P("x^2*y*z"), Ideal(ring, {P("x^2*y")})) << "\n";

    Ideal I1(ring, {P("x^2"), P("x*y")});
    auto s1 = saturate(I1, Ideal::principal(P("y")));
    std::cout << "sat((x2,xy),y) = ";
    for (auto& g : s1.ideal.generators()) std::cout << g.to_string() << " ";
    std::cout << " exp=" << s1.exponent << "\n";

    auto s2 = saturate(I1, Ideal::principal(P("x")));
    std::cout << "sat((x2,xy),x) gens: ";
    for (auto& g : s2.ideal.generators()) std::cout << g.to_string() << " ";
    std::cout << " exp=" << s2.exponent << "\n";

    Ideal meet = intersect(Ideal(ring, {P("x^2"), P("y")}), Ideal(ring, {P("x")}));
    std::cout << "(x2,y) cap (x): ";
    for (auto& g : meet.generators()) std::cout << g.to_string() << " | ";
    std::cout << "\n";

    Ideal cln = colon(Ideal(ring, {P("x*y")}), Ideal(ring, {P("x")}));
    std::cout << "(xy):(x): ";
    for (auto& g : cln.generators()) std::cout << g.to_string() << " ";
    std::cout << "\n";

    // Bayer-Stillman shortcut vs chain saturation
    Ideal H(ring, {P("x^5"), P("x*y^5"), P("-x^4*y^3 - y^5*z^2")});
    Ideal bs = fast_saturation(H);
    auto chain = saturate_irrelevant(H);
    std::cout << "fast == chain sat: " << ideal_equal(bs, chain.ideal) << " exp=" << chain.exponent << "\n";
    std::cout << "y7 in satz(H): " << ideal_member(P("y^7"), saturation_by_variable(H, 2)) << "\n";
    std::cout << "y7 in saty(H): " << ideal_member(P("y^7"), saturation_by_variable(H, 1)) << "\n";
    std::cout << "y7 in sat(H):  " << in_saturation(P("y^7"), H) << "\n";

    auto hd = hilbert_data(quartet);
    std::cout << "HP(quartet) coeffs:";
    for (auto& c : hd.hilbert_polynomial) std::cout << " " << rational_to_string(c);
    std::cout << "  HF:";
    for (int d = 0; d <= 6; ++d) std::cout << " " << hd.function(d).str();
    std::cout << "  stab=" << hd.stabilization_degree << "\n";

    auto sb = extract_standard_basis({P("x^2"), P("x*y"), P("x^3")});
    std::cout << "extract (x2,xy,x3): ";
    for (auto& e : sb.elements) std::cout << e.to_string() << " | ";
    std::cout << "\n";

    auto betti = first_betti(Ideal(ring, {P("x^3*z^2"), P("x^2*y^3"), P("y^2*z^3"), P("x^2*y^2*z^2")}));
    std::cout << "betti ex2.4: ";
    for (auto& [d, c] : betti) std::cout << d << ":" << c << " ";
    std::cout << "\n";

    // membership exponent: f = xyz vs H = (x2y, y2z, xz2)
    Ideal H23(ring, {P("x^2*y"), P("y^2*z"), P("x*z^2")});
    std::cout << "exp(xyz, H23) = " << membership_exponent(P("x*y*z"), H23) << "\n";
    std::cout << "exp(x^2*y, (y2z,xz2,xyz)) = "
              << membership_exponent(P("x^2*y"), Ideal(ring, {P("y^2*z"), P("x*z^2"), P("x*y*z")}))
              << "\n";
    return 0;
}
