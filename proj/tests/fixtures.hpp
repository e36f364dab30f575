#pragma once

#include <string>
#include <vector>

#include "algdense/places.hpp"

// (field minpoly, element as polynomial in the generator, prime)
struct PlaceFixture {
  algdense::RatPoly field;
  algdense::RatPoly element;
  long prime;
};

inline std::vector<PlaceFixture> place_fixtures() {
  using algdense::BigRat;
  using algdense::RatPoly;
  RatPoly s2{-2, 0, 1}, phi{-1, -1, 1}, cbrt2{-2, 0, 0, 1}, s23{1, 0, -10, 0, 1}, salem{1, -1, -1, -1, 1},
      s7{-7, 0, 1}, gi{1, 0, 1}, x2p2{8, 2, 1};
  return {
      {s2, RatPoly{0, 1}, 2},
      {s2, RatPoly{0, 1}, 7},
      {s2, RatPoly{1, 1}, 2},
      {s2, RatPoly{3, 1}, 7},
      {phi, RatPoly{0, 1}, 2},
      {phi, RatPoly{2}, 2},
      {phi, RatPoly{1, 2}, 5},
      {phi, RatPoly({0, BigRat(1, 3)}), 3},
      {cbrt2, RatPoly{0, 1}, 2},
      {cbrt2, RatPoly{1, 1}, 3},
      {cbrt2, RatPoly{5, 1}, 127},
      {cbrt2, RatPoly{0, 0, 3}, 3},
      {s23, RatPoly({0, BigRat(-9, 2), 0, BigRat(1, 2)}), 2},
      {s23, RatPoly({0, BigRat(11, 2), 0, BigRat(-1, 2)}), 3},
      {s23, RatPoly{1, 1}, 2},
      {salem, RatPoly{1, 1}, 3},
      {s7, RatPoly{0, 1}, 7},
      {s7, RatPoly{1, 1}, 3},
      {gi, RatPoly{1, 1}, 2},
      {x2p2, RatPoly{0, 1}, 2},
  };
}
