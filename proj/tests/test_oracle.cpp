#include <doctest.h>

#include "secantlab/oracle.hpp"

using namespace secantlab;

TEST_CASE("assumption checks") {
  CHECK(check_assumption(VarietyDescriptor::curve(0, 5)).value);   // 5 >= 3
  CHECK(!check_assumption(VarietyDescriptor::curve(1, 4)).value);  // 4 < 5
  CHECK(!check_assumption(VarietyDescriptor::hypersurface(1, 10, 7)).value);  // 7 < 11
  CHECK(check_assumption(VarietyDescriptor::hypersurface(1, 3, 5)).value);    // 5 >= 4
  CHECK(check_assumption(VarietyDescriptor::custom(2, {1, 0, 0}, 9, true)).value);
}

TEST_CASE("hypersurface cohomology combinatorics") {
  // plane curve of degree 10, twist 7: h^1(X, O(7)) = C(2, 2) = 1
  HypersurfaceCohomology a = hypersurface_cohomology(1, 10, 7);
  CHECK(a.hn_twisted == 1);
  // plane cubic: h^1(O_X) = 1 (elliptic)
  HypersurfaceCohomology b = hypersurface_cohomology(1, 3, 0);
  CHECK(b.h == std::vector<mpz_class>{1, 1});
  // quartic surface: h^2(O_X) = C(3, 3) = 1
  HypersurfaceCohomology c = hypersurface_cohomology(2, 4, 0);
  CHECK(c.h == std::vector<mpz_class>{1, 0, 1});

  // Serre-duality style brute check on the plane curve: h^1(X, O(k)) equals
  // the count of monomials of degree d-3-k in three variables
  for (int d : {5, 8, 10}) {
    for (int k = 0; k <= d; ++k) {
      long m = d - 3 - k;
      mpz_class expected = m < 0 ? 0 : mpz_class((m + 2) * (m + 1) / 2);
      CHECK(hypersurface_cohomology(1, d, k).hn_twisted == expected);
    }
  }
}

TEST_CASE("predict on curves") {
  Verdict v0 = predict(VarietyDescriptor::curve(0, 5));
  CHECK(v0.assumption_satisfied.value);
  CHECK(v0.normal.value == TriState::Yes);
  CHECK(v0.du_bois.value == TriState::Yes);
  CHECK(v0.cm.value);
  CHECK(v0.rational.value == TriState::Yes);
  CHECK(v0.depth_at_X_points.value == 3);
  CHECK(v0.multiplicity.value == 3);
  CHECK(!v0.deficient_warning.value);

  Verdict v1 = predict(VarietyDescriptor::curve(1, 6));
  CHECK(v1.normal.value == TriState::Yes);
  CHECK(v1.du_bois.value == TriState::Yes);
  CHECK(v1.cm.value);
  CHECK(v1.rational.value == TriState::No);
  CHECK(v1.depth_at_X_points.value == 3);
  CHECK(v1.multiplicity.value == 4);

  Verdict v3 = predict(VarietyDescriptor::curve(3, 9));
  CHECK(v3.cm.value);
  CHECK(v3.rational.value == TriState::No);
}

TEST_CASE("predict on the weakly positive hypersurfaces") {
  Verdict v = predict(VarietyDescriptor::hypersurface(1, 10, 7));
  CHECK(!v.assumption_satisfied.value);
  CHECK(v.normal.value == TriState::Yes);      // 7 >= (10+3)/2
  CHECK(v.du_bois.value == TriState::No);      // h^1(X, O(7)) = 1
  CHECK(v.rational.value == TriState::No);
  CHECK(v.multiplicity.value == 68);           // 70 - 2
  CHECK(!v.deficient_warning.value);           // k >= 3 keeps 3-very ampleness

  Verdict w = predict(VarietyDescriptor::hypersurface(2, 12, 8));
  CHECK(!w.assumption_satisfied.value);
  CHECK(w.normal.value == TriState::Yes);      // 8 >= 7.5
  CHECK(w.du_bois.value == TriState::No);      // C(3, 3) = 1
  CHECK(w.multiplicity.value == 12 * 64 - 4);
}

TEST_CASE("predict flags deficiency when 3-very ampleness is unknown") {
  // the 2-uple Veronese surface: L^2 = 4, no assumption
  Verdict v = predict(VarietyDescriptor::custom(2, {1, 0, 0}, 4, false));
  CHECK(v.deficient_warning.value);
  CHECK(v.normal.value == TriState::Unknown);
  CHECK(v.du_bois.value == TriState::Unknown);
  CHECK(v.multiplicity.value == 0);  // 4 - 4, flagged by the warning
}

TEST_CASE("verdict hierarchy and depth bounds over a descriptor sweep") {
  std::vector<VarietyDescriptor> sweep;
  for (int g = 0; g <= 3; ++g) {
    sweep.push_back(VarietyDescriptor::curve(g, 2 * g + 3));
    sweep.push_back(VarietyDescriptor::curve(g, 2 * g + 9));
    sweep.push_back(VarietyDescriptor::curve(g, g + 2));  // assumption fails
  }
  sweep.push_back(VarietyDescriptor::hypersurface(1, 10, 7));
  sweep.push_back(VarietyDescriptor::hypersurface(2, 12, 8));
  sweep.push_back(VarietyDescriptor::hypersurface(3, 4, 8));  // assumption holds
  sweep.push_back(VarietyDescriptor::custom(2, {1, 0, 0}, 9, true));
  sweep.push_back(VarietyDescriptor::custom(2, {1, 1, 0}, 9, true));
  sweep.push_back(VarietyDescriptor::custom(3, {1, 0, 1, 0}, 27, true));

  for (const VarietyDescriptor& D : sweep) {
    Verdict v = predict(D);
    CHECK(v.hierarchy_consistent());
    const int n = D.n();
    if (v.assumption_satisfied.value) {
      CHECK(v.depth_at_X_points.value >= n + 2);
      CHECK(v.depth_at_X_points.value <= 2 * n + 1);
      if (n == 1) CHECK(v.cm.value);  // curves: CM whenever the assumption holds
      CHECK(v.multiplicity.value >= 1);
    }
  }
}

TEST_CASE("custom depth formula cases") {
  // h^1 = 0, h^2 arbitrary: depth = n+2+max{i <= 1} = 5 = 2n+1 for n = 2
  Verdict a = predict(VarietyDescriptor::custom(2, {1, 0, 1}, 9, true));
  CHECK(a.depth_at_X_points.value == 5);
  CHECK(a.cm.value);
  CHECK(a.rational.value == TriState::No);

  // h^1 != 0: the max is 0, depth = n+2 = 4 < 5, not CM
  Verdict b = predict(VarietyDescriptor::custom(2, {1, 1, 0}, 9, true));
  CHECK(b.depth_at_X_points.value == 4);
  CHECK(!b.cm.value);
}

TEST_CASE("descriptor JSON round-trips") {
  for (const VarietyDescriptor& D :
       {VarietyDescriptor::curve(2, 7), VarietyDescriptor::hypersurface(2, 12, 8),
        VarietyDescriptor::custom(2, {1, 0, 0}, 4, false)}) {
    VarietyDescriptor back = descriptor_from_json(descriptor_json(D));
    CHECK(back.kind == D.kind);
    CHECK(back.n() == D.n());
    CHECK(back.h_vector() == D.h_vector());
    CHECK(back.l_power() == D.l_power());
  }
  CHECK_THROWS(descriptor_from_json("{\"kind\": \"sphere\"}"));
}

TEST_CASE("verdict JSON carries citations") {
  std::string j = verdict_json(predict(VarietyDescriptor::curve(0, 5)));
  CHECK(j.find("citation") != std::string::npos);
  CHECK(j.find("\"rational\"") != std::string::npos);
  CHECK(j.find("yes") != std::string::npos);
}
