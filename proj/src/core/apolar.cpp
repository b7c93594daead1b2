#include "apolar.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace llab {
namespace {

void check_level(const Poly& f, unsigned k) {
  require(!f.is_zero(), "f must be nonzero");
  require(f.is_homogeneous(), "f must be homogeneous");
  require(k <= f.degree(), "k out of range: " + std::to_string(k) + " > deg(f) = " +
                               std::to_string(f.degree()));
}

std::vector<DiffOp> monomial_ops(const VarsPtr& vars, unsigned k) {
  std::vector<DiffOp> ops;
  for (auto& m : mono_basis(vars->size(), k)) ops.push_back(DiffOp::monomial(vars, std::move(m)));
  return ops;
}

}  // namespace

RationalMatrix support_matrix(std::span<const Poly> polys, std::vector<Monomial>* rows) {
  std::map<Monomial, std::size_t, std::greater<>> index;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) index.emplace(t.first, 0);
  std::size_t r = 0;
  for (auto& [m, i] : index) i = r++;
  RationalMatrix mat(index.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c)
    for (const auto& [m, coeff] : polys[c].terms()) mat(index.at(m), c) = coeff;
  if (rows) {
    rows->clear();
    for (const auto& [m, i] : index) rows->push_back(m);
  }
  return mat;
}

std::size_t poly_rank(std::span<const Poly> polys) { return rank(support_matrix(polys)); }

std::vector<std::size_t> independent_subset(std::span<const Poly> polys) {
  return echelon(support_matrix(polys)).pivot_columns;
}

Catalecticant catalecticant(const Poly& f, unsigned k) {
  check_level(f, k);
  Catalecticant cat;
  cat.k = k;
  const unsigned d = f.degree();
  cat.row_monomials = mono_basis(f.vars().size(), d - k);
  cat.column_ops = monomial_ops(f.vars_ptr(), k);
  cat.matrix = RationalMatrix(cat.row_monomials.size(), cat.column_ops.size());
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < cat.row_monomials.size(); ++r) row_of[cat.row_monomials[r]] = r;
  for (std::size_t c = 0; c < cat.column_ops.size(); ++c) {
    const Poly g = diff_apply(cat.column_ops[c], f);
    for (const auto& [m, coeff] : g.terms()) cat.matrix(row_of.at(m), c) = coeff;
  }
  return cat;
}

std::vector<DiffOp> ann_basis(const Poly& f, unsigned k) {
  const Catalecticant cat = catalecticant(f, k);
  std::vector<DiffOp> out;
  for (const auto& v : kernel_basis(cat.matrix)) {
    Poly op(f.vars_ptr());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) op += cat.column_ops[j].poly() * v[j];
    out.emplace_back(std::move(op));
  }
  return out;
}

AkBasis ak_basis(const Poly& f, unsigned k, std::span<const DiffOp> preferred_prefix) {
  check_level(f, k);
  std::vector<DiffOp> candidates;
  for (std::size_t i = 0; i < preferred_prefix.size(); ++i) {
    const DiffOp& op = preferred_prefix[i];
    require(op.vars().same_names(f.vars()), "prefix operator uses a different variable set");
    require(!op.is_zero() && op.poly().is_homogeneous() && op.degree() == k,
            "prefix operator " + std::to_string(i) + " is not homogeneous of degree " +
                std::to_string(k));
    candidates.push_back(op);
  }
  for (auto& op : monomial_ops(f.vars_ptr(), k)) candidates.push_back(std::move(op));

  std::vector<Poly> derived;
  derived.reserve(candidates.size());
  for (const auto& op : candidates) derived.push_back(diff_apply(op, f));

  const auto pivots = independent_subset(derived);
  for (std::size_t i = 0; i < preferred_prefix.size(); ++i) {
    if (i >= pivots.size() || pivots[i] != i) {
      fail(ErrorKind::InvalidArgument,
           "preferred prefix is dependent modulo Ann(f) at index " + std::to_string(i) + " (" +
               preferred_prefix[i].to_string() + ")");
    }
  }
  AkBasis basis;
  basis.k = k;
  basis.prefix_length = preferred_prefix.size();
  for (auto c : pivots) {
    basis.ops.push_back(candidates[c]);
    basis.derived.push_back(derived[c]);
  }
  return basis;
}

std::string HilbertVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

HilbertVector hilbert_vector(const Poly& f) {
  require(!f.is_zero(), "Hilbert vector of the zero polynomial is undefined");
  require(f.is_homogeneous(), "f must be homogeneous");
  const unsigned d = f.degree();
  HilbertVector hv;
  hv.dims.resize(d + 1);
  // Levels are computed independently; h_k = h_{d-k} is not assumed.
  for (unsigned k = 0; k <= d; ++k) {
    std::vector<Poly> derived;
    for (auto& op : monomial_ops(f.vars_ptr(), k)) derived.push_back(diff_apply(op, f));
    hv.dims[k] = poly_rank(derived);
  }
  return hv;
}

bool is_unimodal(const HilbertVector& hv) {
  const auto& h = hv.dims;
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 >= h.size();
}

bool depends_on_all_vars(const Poly& f) {
  require(!f.is_zero(), "f must be nonzero");
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < f.vars().size(); ++i) partials.push_back(partial(f, i));
  return poly_rank(partials) == f.vars().size();
}

SpanCoordinates::SpanCoordinates(std::vector<Poly> basis) : basis_(std::move(basis)) {
  matrix_ = support_matrix(basis_, &rows_);
  for (std::size_t r = 0; r < rows_.size(); ++r) row_index_[rows_[r]] = r;
  const Echelon ech = echelon(matrix_.transposed());
  if (ech.rank != basis_.size()) {
    fail(ErrorKind::InvalidArgument, "span basis is linearly dependent");
  }
  pivot_rows_ = ech.pivot_columns;
  RationalMatrix square(basis_.size(), basis_.size());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) square(i, j) = matrix_(pivot_rows_[i], j);
  pivot_inverse_ = inverse(square);
}

std::vector<Rational> SpanCoordinates::coordinates(const Poly& p) const {
  std::vector<Rational> full(rows_.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = row_index_.find(m);
    if (it == row_index_.end()) fail(ErrorKind::InvalidArgument, "polynomial is outside the span");
    full[it->second] = c;
  }
  std::vector<Rational> picked(pivot_rows_.size());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i) picked[i] = full[pivot_rows_[i]];
  std::vector<Rational> coords = pivot_inverse_.apply(picked);
  if (matrix_.apply(coords) != full) {
    fail(ErrorKind::InvalidArgument, "polynomial is outside the span");
  }
  return coords;
}

}  // namespace llab
