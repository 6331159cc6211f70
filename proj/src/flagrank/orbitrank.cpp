#include "flagrank/orbitrank.hpp"

#include <random>
#include <stdexcept>

namespace flagrank {

namespace {

CellPoint random_cell_point(const ParabolicData& p, std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<long> coeff(-height, height);
  CellPoint pt;
  pt.coeffs.resize(p.u_roots.size());
  for (long& t : pt.coeffs) t = coeff(rng);
  return pt;
}

std::mt19937_64 attempt_rng(const RunConfig& cfg, int attempt) {
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(attempt) + 0x9e3779b9};
  return std::mt19937_64(seq);
}

RatMat select_columns(const RatMat& m, const std::vector<int>& cols) {
  RatMat r(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = m.at(i, cols[j]);
  return r;
}

RatMat stack(const std::vector<RatMat>& blocks) {
  std::size_t rows = 0;
  for (const RatMat& b : blocks) rows += b.rows();
  RatMat m(rows, blocks.empty() ? 0 : blocks.front().cols());
  std::size_t off = 0;
  for (const RatMat& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(off + i, j) = b.at(i, j);
    off += b.rows();
  }
  return m;
}

}  // namespace

RatMat cell_point_rows(const ChevalleyAlgebra& alg, const ParabolicData& p,
                       const CellPoint& pt) {
  if (pt.coeffs.size() != p.u_roots.size())
    throw std::invalid_argument("cell point has wrong coordinate count");
  // Ad(g)^{-1} for g = prod_k exp(t_k y_k): reverse the word and negate.
  std::vector<ChevalleyAlgebra::UnipotentFactor> word;
  for (std::size_t k = p.u_roots.size(); k-- > 0;)
    if (pt.coeffs[k] != 0) word.push_back({p.u_roots[k], true, -pt.coeffs[k]});
  return alg.word_rows(word, p.u_minus_basis);
}

int tangent_rank(const ChevalleyAlgebra& alg, const ParabolicData& p,
                 const std::vector<CellPoint>& pts) {
  std::vector<RatMat> blocks;
  blocks.reserve(pts.size());
  for (const CellPoint& pt : pts) blocks.push_back(cell_point_rows(alg, p, pt));
  return static_cast<int>(stack(blocks).rank());
}

TransitivityVerdict diagonal_open_orbit(const ChevalleyAlgebra& alg,
                                        const ParabolicData& p, int n,
                                        const RunConfig& cfg) {
  if (n < 1) throw std::invalid_argument("need at least one copy of G/P");
  TransitivityVerdict v;
  RankCertificate& c = v.certificate;
  c.required_rank = n * p.flag_dim;
  if (c.required_rank > alg.dim()) {
    c.dimension_bound = true;
    return v;
  }
  for (int a = 0; a < cfg.retries; ++a) {
    std::mt19937_64 rng = attempt_rng(cfg, a);
    std::vector<CellPoint> pts;
    // The verdict is translation invariant, so pin the first point at eP.
    pts.push_back(CellPoint{std::vector<long>(p.u_roots.size(), 0)});
    for (int i = 1; i < n; ++i) pts.push_back(random_cell_point(p, rng, cfg.coeff_height));
    c.attempts = a + 1;
    c.achieved_rank = tangent_rank(alg, p, pts);
    c.points = std::move(pts);
    if (c.achieved_rank == c.required_rank) {
      c.full = true;
      v.generically_transitive = true;
      return v;
    }
  }
  return v;
}

TransitivityVerdict levi_open_orbit(const ChevalleyAlgebra& alg,
                                    const ParabolicData& p, int c,
                                    const RunConfig& cfg) {
  if (c < 0) throw std::invalid_argument("copy count must be >= 0");
  TransitivityVerdict v;
  RankCertificate& cert = v.certificate;
  cert.required_rank = c * p.flag_dim;
  if (c == 0) {
    cert.full = true;
    v.generically_transitive = true;
    return v;
  }
  const int dim_l = static_cast<int>(p.levi_basis.size());
  if (cert.required_rank > dim_l) {
    cert.dimension_bound = true;
    return v;
  }
  // Position of each u^- basis index inside the block coordinates.
  std::vector<int> slot(alg.dim(), -1);
  for (std::size_t i = 0; i < p.u_minus_basis.size(); ++i) slot[p.u_minus_basis[i]] = static_cast<int>(i);

  for (int a = 0; a < cfg.retries; ++a) {
    std::mt19937_64 rng = attempt_rng(cfg, a);
    std::vector<CellPoint> us;
    for (int j = 0; j < c; ++j) us.push_back(random_cell_point(p, rng, cfg.coeff_height));
    // Differential of the L-orbit map: xi -> ([xi, u_1], ..., [xi, u_c]).
    RatMat m(static_cast<std::size_t>(cert.required_rank), p.levi_basis.size());
    for (std::size_t bi = 0; bi < p.levi_basis.size(); ++bi)
      for (int j = 0; j < c; ++j)
        for (std::size_t k = 0; k < p.u_roots.size(); ++k) {
          if (us[j].coeffs[k] == 0) continue;
          for (const auto& [idx, coef] :
               alg.bracket_basis(p.levi_basis[bi], alg.y_index(p.u_roots[k]))) {
            if (slot[idx] < 0) throw std::logic_error("Levi bracket left u^-");
            m.at(static_cast<std::size_t>(j) * p.flag_dim + slot[idx], bi) +=
                Rat(coef) * us[j].coeffs[k];
          }
        }
    cert.attempts = a + 1;
    cert.achieved_rank = static_cast<int>(m.rank());
    cert.points = std::move(us);
    if (cert.achieved_rank == cert.required_rank) {
      cert.full = true;
      v.generically_transitive = true;
      return v;
    }
  }
  return v;
}

int gtd_flag(const ChevalleyAlgebra& alg, const ParabolicData& p, const RunConfig& cfg) {
  int n = 2;  // two points always lie on an open orbit (big Bruhat cell)
  while (diagonal_open_orbit(alg, p, n + 1, cfg).generically_transitive) ++n;
  return n;
}

int gtd_levi(const ChevalleyAlgebra& alg, const ParabolicData& p, const RunConfig& cfg) {
  int c = 0;
  while (levi_open_orbit(alg, p, c + 1, cfg).generically_transitive) ++c;
  return c;
}

TransitivityVerdict double_flag_spherical(const ChevalleyAlgebra& alg,
                                          const ParabolicData& p,
                                          const RunConfig& cfg) {
  TransitivityVerdict v;
  RankCertificate& c = v.certificate;
  c.required_rank = 2 * p.flag_dim;
  if (c.required_rank > static_cast<int>(p.borel_basis.size())) {
    c.dimension_bound = true;
    return v;
  }
  for (int a = 0; a < cfg.retries; ++a) {
    std::mt19937_64 rng = attempt_rng(cfg, a);
    // eP is not generic for the Borel action, so both points are random.
    std::vector<CellPoint> pts;
    for (int i = 0; i < 2; ++i) pts.push_back(random_cell_point(p, rng, cfg.coeff_height));
    std::vector<RatMat> blocks;
    for (const CellPoint& pt : pts)
      blocks.push_back(select_columns(cell_point_rows(alg, p, pt), p.borel_basis));
    c.attempts = a + 1;
    c.achieved_rank = static_cast<int>(stack(blocks).rank());
    c.points = std::move(pts);
    if (c.achieved_rank == c.required_rank) {
      c.full = true;
      v.generically_transitive = true;
      return v;
    }
  }
  return v;
}

}  // namespace flagrank
