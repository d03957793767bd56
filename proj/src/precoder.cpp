/**
 * @file precoder.cpp
 * @brief Precoder constructions and application paths.
 */
#include "sbprec/precoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "sbprec/linalg.hpp"

namespace sbprec {

namespace {

using json = nlohmann::json;

// Result of one greedy column build, support sorted ascending.
struct ColumnBuild {
  std::vector<std::size_t> support;
  std::vector<cplx> values;
};

std::vector<std::size_t> sorting_permutation(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> perm(v.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return perm;
}

// Greedy per-column build: iteration k correlates the residual with the
// available beamspace columns, augments the support with the argmax (ties
// break to the lowest beam index), re-solves the ridge system against e_u and
// refreshes the residual.
ColumnBuild sbp_column(const ComplexMatrix& hb, std::size_t u, double kappa, std::size_t K,
                       std::vector<std::size_t>* order, std::vector<double>* objectives) {
  const std::size_t num_ue = hb.rows();
  const std::size_t num_beams = hb.cols();

  ComplexVector residual(num_ue);
  residual[u] = 1.0;  // e_u
  ComplexMatrix e_u(num_ue, 1);
  e_u(u, 0) = 1.0;

  std::vector<char> available(num_beams, 1);
  std::vector<std::size_t> selected;
  selected.reserve(K);
  ComplexMatrix q;

  for (std::size_t k = 0; k < K; ++k) {
    std::size_t best = num_beams;
    double best_mag = -1.0;
    for (std::size_t b = 0; b < num_beams; ++b) {
      if (!available[b]) continue;
      cplx corr = 0.0;
      for (std::size_t i = 0; i < num_ue; ++i) corr += std::conj(hb(i, b)) * residual[i];
      const double mag = std::norm(corr);
      if (mag > best_mag) {
        best_mag = mag;
        best = b;
      }
    }
    selected.push_back(best);
    available[best] = 0;

    const ComplexMatrix h_sel = take_columns(hb, selected);
    q = ridge_ls(h_sel, e_u, kappa);

    double res_sq = 0.0;
    for (std::size_t i = 0; i < num_ue; ++i) {
      cplx acc = (i == u) ? cplx{1.0} : cplx{0.0};
      for (std::size_t j = 0; j < selected.size(); ++j) acc -= h_sel(i, j) * q(j, 0);
      residual[i] = acc;
      res_sq += std::norm(acc);
    }
    if (objectives) {
      double q_sq = 0.0;
      for (std::size_t j = 0; j < selected.size(); ++j) q_sq += std::norm(q(j, 0));
      objectives->push_back(res_sq + kappa * q_sq);
    }
  }
  if (order) *order = selected;

  ColumnBuild out;
  const std::vector<std::size_t> perm = sorting_permutation(selected);
  out.support.resize(K);
  out.values.resize(K);
  for (std::size_t j = 0; j < K; ++j) {
    out.support[j] = selected[perm[j]];
    out.values[j] = q(perm[j], 0);
  }
  return out;
}

// Single re-solve on a fixed support against e_u (one-shot path).
ColumnBuild solve_column_on_support(const ComplexMatrix& hb, std::size_t u, double kappa,
                                    std::vector<std::size_t> support) {
  std::sort(support.begin(), support.end());
  ComplexMatrix e_u(hb.rows(), 1);
  e_u(u, 0) = 1.0;
  const ComplexMatrix q = ridge_ls(take_columns(hb, support), e_u, kappa);
  ColumnBuild out;
  out.support = std::move(support);
  out.values.resize(out.support.size());
  for (std::size_t j = 0; j < out.values.size(); ++j) out.values[j] = q(j, 0);
  return out;
}

// Top-K indices by criterion value, ties broken to the lowest index.
std::vector<std::size_t> top_k_indices(const std::vector<double>& crit, std::size_t K) {
  std::vector<std::size_t> idx(crit.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return crit[a] > crit[b]; });
  idx.resize(K);
  return idx;
}

void check_sparsity_args(const BeamspaceChannel& hbar, std::size_t K) {
  if (K < 1 || K > hbar.Hbar.cols())
    throw std::invalid_argument("sparse precoder: K must satisfy 1 <= K <= B");
}

// Scales the stored nonzeros by 1/beta with beta = sqrt(tr(Q^H Q) Es / rho^2).
double normalize_values(std::vector<cplx>& values, double es, double rho2) {
  double tr = 0.0;
  for (const cplx& v : values) tr += std::norm(v);
  if (tr < 1e-30) throw std::domain_error("normalize: zero precoding matrix");
  const double beta = std::sqrt(tr * es / rho2);
  for (cplx& v : values) v /= beta;
  return beta;
}

SparsePrecoder assemble_column_sparse(const ComplexMatrix& hb, std::size_t K,
                                      std::vector<ColumnBuild> cols, double es, double rho2) {
  SparsePrecoder p;
  p.structure = SparsityStructure::kColumnSparse;
  p.B = hb.cols();
  p.U = hb.rows();
  p.K = K;
  p.col_supports.resize(p.U);
  p.values.resize(p.U * K);
  for (std::size_t u = 0; u < p.U; ++u) {
    p.col_supports[u] = std::move(cols[u].support);
    std::copy(cols[u].values.begin(), cols[u].values.end(), p.values.begin() + u * K);
  }
  p.beta = normalize_values(p.values, es, rho2);
  return p;
}

template <typename ColumnFn>
std::vector<ColumnBuild> build_columns_parallel(std::size_t num_ue, ColumnFn&& fn) {
  std::vector<ColumnBuild> cols(num_ue);
  std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < static_cast<std::int64_t>(num_ue); ++u) {
    try {
      cols[static_cast<std::size_t>(u)] = fn(static_cast<std::size_t>(u));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return cols;
}

}  // namespace

ComplexMatrix wf(const ComplexMatrix& H, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("wf: kappa must be nonnegative");
  const std::size_t num_ue = H.rows();
  // U x U form: Q = H^H (H H^H + kappa I_U)^{-1}; equals the B x B expression
  // by the push-through identity and keeps the inversion at U x U.
  ComplexMatrix g(num_ue, num_ue);
  for (std::size_t i = 0; i < num_ue; ++i) {
    for (std::size_t j = 0; j < num_ue; ++j) {
      cplx s = 0.0;
      for (std::size_t b = 0; b < H.cols(); ++b) s += H(i, b) * std::conj(H(j, b));
      g(i, j) = s;
    }
    g(i, i) += kappa;
  }
  return herm(solve_hpd(g, H));
}

ComplexMatrix mrt(const ComplexMatrix& H) { return herm(H); }

std::pair<ComplexMatrix, double> normalize(const ComplexMatrix& Q, double es, double rho2) {
  if (es <= 0.0 || rho2 <= 0.0)
    throw std::invalid_argument("normalize: Es and rho^2 must be positive");
  const double tr = fro_norm_sq(Q);
  if (tr < 1e-30) throw std::domain_error("normalize: zero precoding matrix");
  const double beta = std::sqrt(tr * es / rho2);
  ComplexMatrix p = Q;
  cplx* d = p.data();
  for (std::size_t i = 0; i < p.rows() * p.cols(); ++i) d[i] /= beta;
  return {std::move(p), beta};
}

SparsePrecoder sbp(const BeamspaceChannel& hbar, double kappa, std::size_t K, double es,
                   double rho2, GreedyTrace* trace) {
  check_sparsity_args(hbar, K);
  const ComplexMatrix& hb = hbar.Hbar;
  if (trace) {
    trace->selection_order.assign(hb.rows(), {});
    trace->objectives.assign(hb.rows(), {});
  }
  auto cols = build_columns_parallel(hb.rows(), [&](std::size_t u) {
    return sbp_column(hb, u, kappa, K, trace ? &trace->selection_order[u] : nullptr,
                      trace ? &trace->objectives[u] : nullptr);
  });
  return assemble_column_sparse(hb, K, std::move(cols), es, rho2);
}

SparsePrecoder sbp_serial(const BeamspaceChannel& hbar, double kappa, std::size_t K, double es,
                          double rho2, GreedyTrace* trace) {
  check_sparsity_args(hbar, K);
  const ComplexMatrix& hb = hbar.Hbar;
  if (trace) {
    trace->selection_order.assign(hb.rows(), {});
    trace->objectives.assign(hb.rows(), {});
  }
  std::vector<ColumnBuild> cols(hb.rows());
  for (std::size_t u = 0; u < hb.rows(); ++u)
    cols[u] = sbp_column(hb, u, kappa, K, trace ? &trace->selection_order[u] : nullptr,
                         trace ? &trace->objectives[u] : nullptr);
  return assemble_column_sparse(hb, K, std::move(cols), es, rho2);
}

SparsePrecoder rs(const BeamspaceChannel& hbar, double kappa, std::size_t K, double es,
                  double rho2, GreedyTrace* trace) {
  check_sparsity_args(hbar, K);
  const ComplexMatrix& hb = hbar.Hbar;
  const std::size_t num_ue = hb.rows();
  const std::size_t num_beams = hb.cols();

  ComplexMatrix residual = ComplexMatrix::identity(num_ue);
  const ComplexMatrix eye = ComplexMatrix::identity(num_ue);
  std::vector<char> available(num_beams, 1);
  std::vector<std::size_t> selected;
  selected.reserve(K);
  ComplexMatrix qk;
  if (trace) {
    trace->selection_order.assign(1, {});
    trace->objectives.assign(1, {});
  }

  for (std::size_t k = 0; k < K; ++k) {
    // argmax_b || hbar_b^H R ||_2 over the available beams
    std::size_t best = num_beams;
    double best_crit = -1.0;
    for (std::size_t b = 0; b < num_beams; ++b) {
      if (!available[b]) continue;
      double crit = 0.0;
      for (std::size_t c = 0; c < num_ue; ++c) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < num_ue; ++i) acc += std::conj(hb(i, b)) * residual(i, c);
        crit += std::norm(acc);
      }
      if (crit > best_crit) {
        best_crit = crit;
        best = b;
      }
    }
    selected.push_back(best);
    available[best] = 0;

    const ComplexMatrix h_sel = take_columns(hb, selected);
    qk = ridge_ls(h_sel, eye, kappa);
    const ComplexMatrix hq = matmul(h_sel, qk);
    for (std::size_t i = 0; i < num_ue; ++i)
      for (std::size_t j = 0; j < num_ue; ++j) residual(i, j) = eye(i, j) - hq(i, j);

    if (trace)
      trace->objectives[0].push_back(fro_norm_sq(residual) + kappa * fro_norm_sq(qk));
  }
  if (trace) trace->selection_order[0] = selected;

  SparsePrecoder p;
  p.structure = SparsityStructure::kRowStructured;
  p.B = num_beams;
  p.U = num_ue;
  p.K = K;
  const std::vector<std::size_t> perm = sorting_permutation(selected);
  p.row_support.resize(K);
  p.values.resize(K * num_ue);
  for (std::size_t r = 0; r < K; ++r) {
    p.row_support[r] = selected[perm[r]];
    for (std::size_t u = 0; u < num_ue; ++u) p.values[r * num_ue + u] = qk(perm[r], u);
  }
  p.beta = normalize_values(p.values, es, rho2);
  return p;
}

SparsePrecoder one_shot_sbp(const BeamspaceChannel& hbar, double kappa, std::size_t K, double es,
                            double rho2) {
  check_sparsity_args(hbar, K);
  const ComplexMatrix& hb = hbar.Hbar;
  auto cols = build_columns_parallel(hb.rows(), [&](std::size_t u) {
    // With residual e_u the selection criterion reduces to |Hbar[u, b]|.
    std::vector<double> crit(hb.cols());
    for (std::size_t b = 0; b < hb.cols(); ++b) crit[b] = std::norm(hb(u, b));
    return solve_column_on_support(hb, u, kappa, top_k_indices(crit, K));
  });
  return assemble_column_sparse(hb, K, std::move(cols), es, rho2);
}

SparsePrecoder one_shot_sbp_serial(const BeamspaceChannel& hbar, double kappa, std::size_t K,
                                   double es, double rho2) {
  check_sparsity_args(hbar, K);
  const ComplexMatrix& hb = hbar.Hbar;
  std::vector<ColumnBuild> cols(hb.rows());
  for (std::size_t u = 0; u < hb.rows(); ++u) {
    std::vector<double> crit(hb.cols());
    for (std::size_t b = 0; b < hb.cols(); ++b) crit[b] = std::norm(hb(u, b));
    cols[u] = solve_column_on_support(hb, u, kappa, top_k_indices(crit, K));
  }
  return assemble_column_sparse(hb, K, std::move(cols), es, rho2);
}

SparsePrecoder one_shot_rs(const BeamspaceChannel& hbar, double kappa, std::size_t K, double es,
                           double rho2) {
  check_sparsity_args(hbar, K);
  const ComplexMatrix& hb = hbar.Hbar;
  const std::size_t num_ue = hb.rows();
  // With residual I_U the selection criterion reduces to the column norms.
  std::vector<double> crit(hb.cols());
  for (std::size_t b = 0; b < hb.cols(); ++b) {
    double s = 0.0;
    for (std::size_t u = 0; u < num_ue; ++u) s += std::norm(hb(u, b));
    crit[b] = s;
  }
  std::vector<std::size_t> support = top_k_indices(crit, K);
  std::sort(support.begin(), support.end());

  const ComplexMatrix qk = ridge_ls(take_columns(hb, support), ComplexMatrix::identity(num_ue), kappa);

  SparsePrecoder p;
  p.structure = SparsityStructure::kRowStructured;
  p.B = hb.cols();
  p.U = num_ue;
  p.K = K;
  p.row_support = std::move(support);
  p.values.resize(K * num_ue);
  for (std::size_t r = 0; r < K; ++r)
    for (std::size_t u = 0; u < num_ue; ++u) p.values[r * num_ue + u] = qk(r, u);
  p.beta = normalize_values(p.values, es, rho2);
  return p;
}

ComplexMatrix SparsePrecoder::densify() const {
  ComplexMatrix m(B, U);
  if (structure == SparsityStructure::kColumnSparse) {
    for (std::size_t u = 0; u < U; ++u)
      for (std::size_t i = 0; i < K; ++i) m(col_supports[u][i], u) = values[u * K + i];
  } else {
    for (std::size_t r = 0; r < K; ++r)
      for (std::size_t u = 0; u < U; ++u) m(row_support[r], u) = values[r * U + u];
  }
  return m;
}

ComplexVector apply_two_stage(const SparsePrecoder& p, const ComplexVector& s,
                              const FftPlan& plan) {
  if (s.size() != p.U) throw std::invalid_argument("apply_two_stage: symbol size mismatch");
  if (plan.size() != p.B) throw std::invalid_argument("apply_two_stage: plan size mismatch");
  ComplexVector x(p.B);
  if (p.structure == SparsityStructure::kColumnSparse) {
    for (std::size_t u = 0; u < p.U; ++u) {
      const cplx su = s[u];
      for (std::size_t i = 0; i < p.K; ++i) x[p.col_supports[u][i]] += p.values[u * p.K + i] * su;
    }
  } else {
    for (std::size_t r = 0; r < p.K; ++r) {
      cplx acc = 0.0;
      for (std::size_t u = 0; u < p.U; ++u) acc += p.values[r * p.U + u] * s[u];
      x[p.row_support[r]] = acc;
    }
  }
  plan.inverse(x.data());
  return x;
}

ComplexVector apply_two_stage(const SparsePrecoder& p, const ComplexVector& s) {
  return apply_two_stage(p, s, FftPlan(p.B));
}

ComplexVector apply_dense(const DensePrecoder& p, const ComplexVector& s) {
  ComplexVector x = matvec(p.P, s);
  if (p.domain == PrecoderDomain::kBeamspace) {
    FftPlan plan(x.size());
    plan.inverse(x.data());
  }
  return x;
}

std::string to_json(const SparsePrecoder& p) {
  json j;
  j["structure"] =
      p.structure == SparsityStructure::kColumnSparse ? "column_sparse" : "row_structured";
  j["B"] = p.B;
  j["U"] = p.U;
  j["K"] = p.K;
  j["beta"] = p.beta;
  if (p.structure == SparsityStructure::kColumnSparse) {
    j["supports"] = p.col_supports;
  } else {
    j["supports"] = p.row_support;
  }
  std::vector<double> interleaved;
  interleaved.reserve(2 * p.values.size());
  for (const cplx& v : p.values) {
    interleaved.push_back(v.real());
    interleaved.push_back(v.imag());
  }
  j["values"] = interleaved;
  return j.dump(2);
}

SparsePrecoder sparse_precoder_from_json(const std::string& text) {
  const json j = json::parse(text);
  SparsePrecoder p;
  const std::string structure = j.at("structure").get<std::string>();
  if (structure == "column_sparse") {
    p.structure = SparsityStructure::kColumnSparse;
  } else if (structure == "row_structured") {
    p.structure = SparsityStructure::kRowStructured;
  } else {
    throw std::invalid_argument("sparse_precoder_from_json: unknown structure tag");
  }
  p.B = j.at("B").get<std::size_t>();
  p.U = j.at("U").get<std::size_t>();
  p.K = j.at("K").get<std::size_t>();
  p.beta = j.at("beta").get<double>();

  auto check_support = [&](const std::vector<std::size_t>& s) {
    if (s.size() != p.K) throw std::invalid_argument("support size != K");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= p.B || (i > 0 && s[i] <= s[i - 1]))
        throw std::invalid_argument("support indices must be strictly increasing in [0, B)");
    }
  };
  if (p.structure == SparsityStructure::kColumnSparse) {
    p.col_supports = j.at("supports").get<std::vector<std::vector<std::size_t>>>();
    if (p.col_supports.size() != p.U)
      throw std::invalid_argument("expected one support per column");
    for (const auto& s : p.col_supports) check_support(s);
  } else {
    p.row_support = j.at("supports").get<std::vector<std::size_t>>();
    check_support(p.row_support);
  }
  const std::vector<double> interleaved = j.at("values").get<std::vector<double>>();
  if (interleaved.size() != 2 * p.K * p.U)
    throw std::invalid_argument("expected 2*K*U interleaved value entries");
  p.values.resize(p.K * p.U);
  for (std::size_t i = 0; i < p.values.size(); ++i)
    p.values[i] = {interleaved[2 * i], interleaved[2 * i + 1]};
  return p;
}

}  // namespace sbprec
