#include "gl6j/weylreal.hpp"

#include <algorithm>
#include <numeric>

namespace gl6j {

namespace {

int permutation_sign(const std::vector<int> &perm) {
  long long inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

void require_tableau_weight(const Weight &w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0)
      throw std::invalid_argument("weight components must be non-negative");
    if (i > 0 && w[i] > w[i - 1])
      throw std::invalid_argument("weight must be weakly decreasing");
  }
}

} // namespace

YoungTableau::YoungTableau(Weight w) : weight(std::move(w)) {
  require_tableau_weight(weight);
}

int YoungTableau::rows() const {
  int r = 0;
  for (size_t i = 0; i < weight.size(); ++i)
    if (weight[i] > 0)
      r = static_cast<int>(i) + 1;
  return r;
}

int YoungTableau::row_length(int r) const { return weight.at(r - 1); }

int YoungTableau::column_height(int c) const {
  int h = 0;
  for (int v : weight)
    if (v >= c)
      ++h;
  return h;
}

SparsePoly expand_determinant(Symbol sym, const IndexSet &cols) {
  const std::vector<int> &x = cols.elements();
  const int k = cols.size();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  SparsePoly out;
  do {
    Monomial m;
    for (int r = 0; r < k; ++r)
      m = m.times(Variable::matrix(sym, x[perm[r]], r + 1), 1);
    out.add_term(m, Rat(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SparsePoly highest_vector(Symbol sym, const Weight &weight) {
  require_tableau_weight(weight);
  const int n = static_cast<int>(weight.size());
  Monomial m;
  for (int k = 1; k <= n; ++k) {
    int deg = weight[k - 1] - (k < n ? weight[k] : 0);
    if (deg == 0)
      continue;
    std::vector<int> head(k);
    std::iota(head.begin(), head.end(), 1);
    m = m.times(Variable::det(sym, IndexSet(n, head)), deg);
  }
  return SparsePoly::term(m, Rat(1));
}

SparsePoly young_overlay(const Monomial &m, const Weight &weight) {
  YoungTableau tab(weight);
  if (m.is_one())
    throw std::invalid_argument("young_overlay: empty monomial");

  Symbol sym = m.exponents().begin()->first.symbol();
  // Occurrences in canonical (upper, lower) order; one entry per power.
  std::vector<std::pair<int, int>> occ; // (upper, lower)
  for (const auto &[v, e] : m.exponents()) {
    if (v.kind() != Variable::Kind::Matrix)
      throw std::invalid_argument("young_overlay expects matrix variables");
    if (!(v.symbol() == sym))
      throw std::invalid_argument("young_overlay expects a single symbol");
    for (int t = 0; t < e; ++t)
      occ.emplace_back(v.upper(), v.lower());
  }

  const int rows = tab.rows();
  std::vector<int> counts(rows + 1, 0);
  for (auto &[u, l] : occ) {
    if (u < 1 || u > rows || u > static_cast<int>(weight.size()))
      throw std::invalid_argument(
          "young_overlay: upper index has no tableau row");
    ++counts[u];
  }
  for (int r = 1; r <= rows; ++r)
    if (counts[r] != tab.row_length(r))
      throw std::invalid_argument(
          "young_overlay: upper-index multiplicities do not match the weight");

  // content[r][c]: lower index of the occurrence assigned to cell (r,c),
  // filled in reading order of the canonical monomial.
  std::vector<std::vector<int>> content(rows + 1);
  for (int r = 1; r <= rows; ++r)
    content[r].reserve(tab.row_length(r));
  for (auto &[u, l] : occ)
    content[u].push_back(l);

  const int cols = rows >= 1 ? tab.row_length(1) : 0;

  // Row permutations p_r and column permutations q_c, columns carrying the
  // sign. A source cell (r,c) lands on row q_{p_r(c)}(r); the occupant keeps
  // its lower index and takes the target row as upper index.
  std::vector<std::vector<int>> rowPerm(rows + 1), colPerm(cols + 1);
  for (int r = 1; r <= rows; ++r) {
    rowPerm[r].resize(tab.row_length(r));
    std::iota(rowPerm[r].begin(), rowPerm[r].end(), 0);
  }
  for (int c = 1; c <= cols; ++c) {
    colPerm[c].resize(tab.column_height(c));
    std::iota(colPerm[c].begin(), colPerm[c].end(), 0);
  }

  SparsePoly out;
  // Odometer over all row permutations.
  std::function<void(int)> overRows = [&](int r) {
    if (r > rows) {
      // Odometer over all column permutations.
      std::function<void(int, int)> overCols = [&](int c, int sign) {
        if (c > cols) {
          Monomial term;
          for (int sr = 1; sr <= rows; ++sr)
            for (int sc = 0; sc < tab.row_length(sr); ++sc) {
              int tc = rowPerm[sr][sc];            // target column (0-based)
              int tr = colPerm[tc + 1][sr - 1] + 1; // target row
              term =
                  term.times(Variable::matrix(sym, content[sr][sc], tr), 1);
            }
          out.add_term(term, Rat(sign));
          return;
        }
        std::vector<int> &q = colPerm[c];
        std::sort(q.begin(), q.end());
        do {
          overCols(c + 1, sign * permutation_sign(q));
        } while (std::next_permutation(q.begin(), q.end()));
        std::sort(q.begin(), q.end());
      };
      overCols(1, 1);
      return;
    }
    std::vector<int> &p = rowPerm[r];
    std::sort(p.begin(), p.end());
    do {
      overRows(r + 1);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(p.begin(), p.end());
  };
  overRows(1);
  return out;
}

bool membership_check(const SparsePoly &p, const Weight &weight) {
  if (p.is_zero())
    throw std::invalid_argument("membership_check: zero polynomial");
  require_tableau_weight(weight);
  const int n = static_cast<int>(weight.size());
  for (const auto &[m, c] : p.terms()) {
    std::vector<int> degree(n + 1, 0);
    for (const auto &[v, e] : m.exponents()) {
      if (v.kind() != Variable::Kind::Det)
        throw std::invalid_argument(
            "membership_check expects determinant variables");
      if (v.set().rank() != n)
        throw std::invalid_argument("membership_check: rank mismatch");
      degree[v.set().size()] += e;
    }
    for (int k = 1; k <= n; ++k) {
      int want = weight[k - 1] - (k < n ? weight[k] : 0);
      if (degree[k] != want)
        return false;
    }
  }
  return true;
}

SparsePoly expand_to_matrix(const SparsePoly &det_poly) {
  return det_poly.substituted([](const Variable &v) {
    if (v.kind() != Variable::Kind::Det)
      throw std::invalid_argument("expand_to_matrix expects determinant "
                                  "variables");
    return expand_determinant(v.symbol(), v.set());
  });
}

namespace {

// Partition the occurrences of a matrix monomial into strictly increasing
// chains with upper indexes 1..k; these are the diagonals of the candidate
// determinant product.
std::vector<std::vector<int>> diagonal_chains(const Monomial &lead) {
  int maxUpper = 0;
  for (const auto &[v, e] : lead.exponents())
    maxUpper = std::max(maxUpper, v.upper());
  std::vector<std::vector<int>> atLevel(maxUpper + 1);
  for (const auto &[v, e] : lead.exponents())
    for (int t = 0; t < e; ++t)
      atLevel[v.upper()].push_back(v.lower()); // map order: lowers ascending

  struct Chain {
    std::vector<int> lowers;
    int len = 0;
  };
  std::vector<Chain> chains;
  for (int u = 1; u <= maxUpper; ++u) {
    if (u == 1) {
      for (int x : atLevel[1])
        chains.push_back({{x}, 1});
      continue;
    }
    // Largest occurrence first, matched to the open chain with the largest
    // compatible last element.
    std::vector<int> xs = atLevel[u];
    std::sort(xs.rbegin(), xs.rend());
    std::vector<bool> used(chains.size(), false);
    for (int x : xs) {
      int best = -1;
      for (size_t c = 0; c < chains.size(); ++c) {
        if (used[c] || chains[c].len != u - 1)
          continue;
        if (chains[c].lowers.back() >= x)
          continue;
        if (best < 0 || chains[c].lowers.back() > chains[best].lowers.back())
          best = static_cast<int>(c);
      }
      if (best < 0)
        throw CollectError("monomial is not a diagonal of determinants");
      used[best] = true;
      chains[best].lowers.push_back(x);
      chains[best].len = u;
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(chains.size());
  for (auto &c : chains)
    out.push_back(std::move(c.lowers));
  return out;
}

} // namespace

SparsePoly collect_determinants(const SparsePoly &matrix_poly) {
  if (matrix_poly.is_zero())
    return SparsePoly::zero();

  Symbol sym = matrix_poly.terms().begin()->first.exponents().begin()->first
                   .symbol();
  int rank = 0;
  for (const auto &[m, c] : matrix_poly.terms())
    for (const auto &[v, e] : m.exponents()) {
      if (v.kind() != Variable::Kind::Matrix || !(v.symbol() == sym))
        throw CollectError(
            "collect_determinants expects one matrix-variable symbol");
      rank = std::max({rank, v.lower(), v.upper()});
    }

  SparsePoly residual = matrix_poly;
  SparsePoly out;
  size_t guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 100000)
      throw CollectError("collection did not converge");
    const Monomial lead = residual.leading_monomial();
    const Rat c = residual.coefficient(lead);

    Monomial cand;
    SparsePoly expansion = SparsePoly::constant(Rat(1));
    for (const auto &chain : diagonal_chains(lead)) {
      IndexSet set(rank, chain);
      cand = cand.times(Variable::det(sym, set), 1);
      expansion = expansion * expand_determinant(sym, set);
    }
    residual = residual - expansion.scaled(c);
    if (residual.coefficient(lead) != 0)
      throw CollectError("leading term not cancelled by its diagonal");
    out.add_term(cand, c);
  }
  return out;
}

} // namespace gl6j
