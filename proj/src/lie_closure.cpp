#include "nichols/lie_closure.hpp"

#include <stdexcept>

namespace nichols {

std::vector<int> GradedSubspace::dims() const {
  std::vector<int> out;
  for (int d = 1; d <= cap; ++d) out.push_back(slice_rank(d));
  return out;
}

int GradedSubspace::total_dim() const {
  int sum = 0;
  for (const auto& [d, space] : slices) sum += space.rank();
  return sum;
}

int GradedSubspace::slice_rank(int degree) const {
  auto it = slices.find(degree);
  return it == slices.end() ? 0 : it->second.rank();
}

FreeElement slice_element(NicholsAlgebra& algebra, const GradedSubspace& gs, int degree, int row) {
  const DegreeBasis& basis = algebra.degree_basis(degree);
  const auto& rows = gs.slices.at(degree).echelon_rows();
  FreeElement out;
  for (int j = 0; j < basis.dimension(); ++j) out.add_term(basis.basis_words[j], rows[row][j]);
  return out;
}

GradedSubspace generate(NicholsAlgebra& algebra, BracketKind kind, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("closure needs max_degree >= 1");
  if (max_degree > algebra.cap()) throw CapExceeded(max_degree, algebra.cap());

  GradedSubspace gs;
  gs.fingerprint = algebra.fingerprint();
  gs.kind = kind;
  gs.cap = max_degree;

  const int n = algebra.spec().rank;
  RowSpace degree_one(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Cyclotomic> row(n, Cyclotomic());
    row[i] = Cyclotomic(1);
    degree_one.insert(std::move(row));
  }
  gs.slices.emplace(1, std::move(degree_one));

  for (int d = 2; d <= max_degree; ++d) {
    const int dim_bd = algebra.degree_basis(d).dimension();
    RowSpace slice(dim_bd);
    if (dim_bd > 0) {
      for (int a = 1; a < d; ++a) {
        int b = d - a;
        const RowSpace& sa = gs.slices.at(a);
        const RowSpace& sb = gs.slices.at(b);
        if (sa.rank() == 0 || sb.rank() == 0) continue;
        for (int ra = 0; ra < sa.rank(); ++ra) {
          FreeElement u = slice_element(algebra, gs, a, ra);
          for (int rb = 0; rb < sb.rank(); ++rb) {
            FreeElement v = slice_element(algebra, gs, b, rb);
            FreeElement w = bracket(algebra.spec(), kind, u, v);
            if (w.is_zero()) continue;
            slice.insert(algebra.coordinates(w, d));
          }
        }
      }
    }
    gs.slices.emplace(d, std::move(slice));
  }

  // Stabilization: the trailing window of zero slices must be at least as
  // long as the largest degree still alive, and B(V) itself must be
  // exhausted below the cap (a zero Nichols slice stays zero above).
  int last_alive = 0;
  for (int d = 1; d <= max_degree; ++d)
    if (gs.slice_rank(d) > 0) last_alive = d;
  bool window_ok = max_degree - last_alive >= last_alive;
  bool b_exhausted = false;
  for (int m = 1; m <= max_degree && !b_exhausted; ++m)
    b_exhausted = algebra.degree_basis(m).dimension() == 0;
  gs.stabilized = window_ok && b_exhausted;
  return gs;
}

bool contains(NicholsAlgebra& algebra, const GradedSubspace& gs, const FreeElement& u) {
  for (const auto& [len, component] : u.components_by_length()) {
    if (algebra.is_zero(component)) continue;
    if (len == 0 || len > gs.cap) return false;
    auto it = gs.slices.find(len);
    if (it == gs.slices.end()) return false;
    if (!it->second.contains(algebra.coordinates(component, len))) return false;
  }
  return true;
}

EqualityReport equality_probe(NicholsAlgebra& algebra, BracketKind kind1, BracketKind kind2,
                              int max_degree) {
  GradedSubspace g1 = generate(algebra, kind1, max_degree);
  GradedSubspace g2 = generate(algebra, kind2, max_degree);
  EqualityReport report;
  report.cap = max_degree;
  for (int d = 1; d <= max_degree; ++d) {
    bool equal;
    if (g1.slice_rank(d) == 0 && g2.slice_rank(d) == 0) {
      equal = true;
    } else if (g1.slice_rank(d) != g2.slice_rank(d)) {
      equal = false;
    } else {
      equal = g1.slices.at(d).same_span(g2.slices.at(d));
    }
    report.equal_by_degree.push_back(equal);
    if (!equal && !report.first_difference) {
      report.first_difference = d;
      // Witness: an echelon row of one side outside the other.
      const RowSpace& s1 = g1.slices.at(d);
      const RowSpace& s2 = g2.slices.at(d);
      for (int r = 0; r < s1.rank() && !report.witness; ++r)
        if (!s2.contains(s1.echelon_rows()[r]))
          report.witness = slice_element(algebra, g1, d, r).str();
      for (int r = 0; r < s2.rank() && !report.witness; ++r)
        if (!s1.contains(s2.echelon_rows()[r]))
          report.witness = slice_element(algebra, g2, d, r).str();
    }
  }
  return report;
}

}  // namespace nichols
