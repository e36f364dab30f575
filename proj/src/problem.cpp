#include "algdense/problem.hpp"

#include <algorithm>

namespace algdense {

RealAlgebraic RealAlgebraic::rational(const BigRat& q) { return {RatPoly::linear_root(q), ComplexBox::point(q)}; }

RealAlgebraic RealAlgebraic::root_near(const RatPoly& poly, const BigRat& near, const BigRat& tolerance) {
  RatPoly s = squarefree_part(poly);
  if (s.degree() < 1) throw DomainError("root selector: polynomial has no roots");
  if (s.degree() == 1) return rational(-s.coeff(0) / s.coeff(1));
  for (long bits = 32; bits <= 2048; bits *= 2) {
    std::vector<std::pair<BigRat, ComplexBox>> cand;
    for (auto& r : isolate_roots_detailed(s, bits))
      if (r.real) cand.push_back({abs(r.box.re_mid() - near), r.box});
    if (cand.empty()) throw DomainError("root selector: polynomial has no real root");
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (cand.size() == 1) return {s, cand[0].second};
    BigRat slack = cand[0].second.side() + cand[1].second.side();
    if (cand[1].first - cand[0].first > 2 * tolerance + slack) return {s, cand[0].second};
    if (slack * 4 < tolerance) break;
  }
  throw DomainError("root selector: ambiguous, two real roots are equally close to " + to_decimal(near, 12));
}

BigRat RealAlgebraic::rational_value() const {
  RatPoly s = squarefree_part(poly);
  if (s.degree() != 1) throw DomainError("not a rational number");
  return -s.coeff(0) / s.coeff(1);
}

}  // namespace algdense
