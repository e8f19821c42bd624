#include "ksgap/geometry.hpp"

#include <algorithm>

namespace ksgap {

namespace {

RationalPoint indicator(int n, ElementSet u) {
  RationalPoint v(static_cast<std::size_t>(n), Rational(0));
  for (int z : u.elements()) v[static_cast<std::size_t>(z)] = 1;
  return v;
}

void check_direction(const MarkedPoset& m, const RationalPoint& u) {
  if (static_cast<int>(u.size()) != m.n())
    throw BadParameters("direction has length " + std::to_string(u.size()) +
                        " in ambient dimension " + std::to_string(m.n()));
  if (u[static_cast<std::size_t>(m.x())] != u[static_cast<std::size_t>(m.y())])
    throw NotInV("direction does not satisfy u_x = u_y");
}

void check_level_interior(int n, int k) {
  if (k < 2 || k > n - 2)
    throw IndexOutOfRange("level " + std::to_string(k) + " outside [2, " +
                          std::to_string(n - 2) + "]");
}

bool is_k_extreme_faces(int n, int k, const Polytope& K, const Polytope& L,
                        const RationalPoint& u) {
  const Polytope fk = face_of(K, u);
  if (dimension(fk) < n - k - 1) return false;
  const Polytope fl = face_of(L, u);
  if (dimension(fl) < k - 2) return false;
  return sum_dimension(fk, fl) >= n - 3;
}

}  // namespace

Polytope equal_pair_slice(const MarkedPoset& m) {
  const Poset& p = m.poset();
  const ElementSet block = m.between()
                               .with(m.x())
                               .with(m.y());
  Polytope out;
  out.ambient = p.size();
  for (ElementSet u : p.upper_sets()) {
    const ElementSet hit = u & block;
    if (hit.empty() || hit == block)
      out.vertices.push_back(indicator(p.size(), u));
  }
  return out;
}

Polytope split_pair_face(const MarkedPoset& m) {
  const Poset& p = m.poset();
  Polytope out;
  out.ambient = p.size();
  for (ElementSet u : p.upper_sets())
    if (u.contains(m.y()) && !u.contains(m.x()))
      out.vertices.push_back(indicator(p.size(), u));
  return out;
}

Rational support_value(const Polytope& poly, const RationalPoint& u) {
  if (poly.vertices.empty())
    throw BadParameters("support value of an empty polytope");
  if (static_cast<int>(u.size()) != poly.ambient)
    throw BadParameters("direction length differs from ambient dimension");
  std::optional<Rational> best;
  for (const RationalPoint& v : poly.vertices) {
    Rational dot = 0;
    for (std::size_t j = 0; j < u.size(); ++j) dot += u[j] * v[j];
    if (!best || dot > *best) best = dot;
  }
  return *best;
}

Polytope face_of(const Polytope& poly, const RationalPoint& u) {
  const Rational h = support_value(poly, u);
  Polytope out;
  out.ambient = poly.ambient;
  for (const RationalPoint& v : poly.vertices) {
    Rational dot = 0;
    for (std::size_t j = 0; j < u.size(); ++j) dot += u[j] * v[j];
    if (dot == h) out.vertices.push_back(v);
  }
  return out;
}

int dimension(const Polytope& poly) { return affine_dimension(poly.vertices); }

int sum_dimension(const Polytope& a, const Polytope& b) {
  return affine_dimension_of_sum(a.vertices, b.vertices);
}

std::vector<CandidateVector> candidate_vectors(const MarkedPoset& m) {
  const int n = m.n();
  const Poset& p = m.poset();
  std::vector<int> others;
  for (int z = 0; z < n; ++z)
    if (z != m.x() && z != m.y()) others.push_back(z);
  std::vector<CandidateVector> out;
  const auto unit = [n](int z, const Rational& c) {
    RationalPoint v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(z)] = c;
    return v;
  };
  for (int z : others) {
    out.push_back({"+" + p.label(z), unit(z, 1)});
    out.push_back({"-" + p.label(z), unit(z, -1)});
  }
  for (int z : others)
    for (int zp : others) {
      if (z == zp) continue;
      RationalPoint v = unit(z, 1);
      v[static_cast<std::size_t>(zp)] = -1;
      out.push_back({p.label(z) + "-" + p.label(zp), std::move(v)});
    }
  for (int z : others) {
    RationalPoint v = unit(z, 1);
    v[static_cast<std::size_t>(m.x())] = Rational(-1, 2);
    v[static_cast<std::size_t>(m.y())] = Rational(-1, 2);
    RationalPoint w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = -v[j];
    out.push_back({p.label(z) + "-mid", std::move(v)});
    out.push_back({"mid-" + p.label(z), std::move(w)});
  }
  return out;
}

bool is_k_extreme(const MarkedPoset& m, int k, const RationalPoint& u) {
  check_direction(m, u);
  check_level_interior(m.n(), k);
  const Polytope K = equal_pair_slice(m);
  const Polytope L = split_pair_face(m);
  return is_k_extreme_faces(m.n(), k, K, L, u);
}

WitnessSystem solve_witness(const MarkedPoset& m, int k, const Rational& a) {
  if (a <= 0) throw BadParameters("ratio parameter must be positive");
  check_level_interior(m.n(), k);
  WitnessSystem ws{.domain = augment_for_witness(m, nullptr),
                   .augmented = false,
                   .k = k,
                   .a = a};
  ws.augmented = ws.domain.n() != m.n();
  const int n = ws.domain.n();
  const Polytope K = equal_pair_slice(ws.domain);
  const Polytope L = split_pair_face(ws.domain);
  for (CandidateVector& cand : candidate_vectors(ws.domain)) {
    if (!is_k_extreme_faces(n, k, K, L, cand.u)) continue;
    ws.rhs.push_back(support_value(K, cand.u) - a * support_value(L, cand.u));
    ws.rows.push_back(std::move(cand.u));
    ws.row_names.push_back(std::move(cand.name));
  }
  ws.solution = solve_linear_system(ws.rows, ws.rhs, n);
  return ws;
}

bool check_witness_rules(const WitnessSystem& ws,
                         const std::optional<Rational>& pair_mid) {
  const MarkedPoset& m = ws.domain;
  const int n = m.n();
  RationalMatrix rows = ws.rows;
  std::vector<Rational> rhs = ws.rhs;
  const auto pin = [&](int z, const Rational& value) {
    RationalPoint row(static_cast<std::size_t>(n), Rational(0));
    row[static_cast<std::size_t>(z)] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(value);
  };
  for (int z : (m.below_x() | m.below_y_incomp_x()).elements()) pin(z, 0);
  const Rational upper_value = 1 - ws.a;
  for (int z : (m.above_y() | m.above_x_incomp_y()).elements())
    pin(z, upper_value);
  const ElementSet mid = m.between();
  for (int z : mid.elements())
    for (int zp : (m.poset().strictly_above(z) & mid).elements()) {
      RationalPoint row(static_cast<std::size_t>(n), Rational(0));
      row[static_cast<std::size_t>(z)] = 1;
      row[static_cast<std::size_t>(zp)] = -1;
      rows.push_back(std::move(row));
      rhs.push_back(0);
    }
  if (pair_mid) {
    RationalPoint row(static_cast<std::size_t>(n), Rational(0));
    row[static_cast<std::size_t>(m.x())] = Rational(1, 2);
    row[static_cast<std::size_t>(m.y())] = Rational(1, 2);
    rows.push_back(std::move(row));
    rhs.push_back(*pair_mid);
  }
  return solve_linear_system(rows, rhs, n).feasible;
}

}  // namespace ksgap
