#include "seif/flbundle.hpp"

#include <map>

namespace seif {

namespace {

using Expansion = std::map<Frac, Vec>;

ElementarySection shift_up(const ElementarySection& s, const Mat& n, bool z_side) {
  if (z_side) return {s.a, s.alpha + 1};
  return d_tau_inverse(s, n);
}

Frac min_exponent(const LatticeBasis& b) {
  bool first = true;
  Frac lo;
  for (const auto& g : b.generators)
    for (const auto& t : g)
      if (first || t.alpha < lo) lo = t.alpha, first = false;
  return lo;
}

// C-span of the shifted generators, truncated above the cutoff.
std::vector<Expansion> truncated_span(const LatticeBasis& b, const Mat& n, const Frac& cutoff) {
  std::vector<Expansion> out;
  for (const auto& g : b.generators) {
    Section cur = g;
    for (;;) {
      Expansion e;
      bool any = false;
      Frac lo = cutoff + 1;
      for (const auto& t : cur) {
        if (t.alpha > cutoff) continue;
        any = true;
        lo = std::min(lo, t.alpha);
        auto it = e.find(t.alpha);
        if (it == e.end()) e[t.alpha] = t.a;
        else it->second += t.a;
      }
      if (!any) break;
      out.push_back(e);
      for (auto& t : cur) t = shift_up(t, n, b.z_side);
    }
  }
  return out;
}

}  // namespace

Subspace gr_v(const LatticeBasis& b, const Mat& n, const Frac& beta, const Frac& cutoff) {
  if (beta >= cutoff) throw Error(ErrorCode::TruncationInsufficient, "Gr_V at " + frac_string(beta) + " reaches the cutoff " + frac_string(cutoff));
  int d = int(n.rows());
  auto span = truncated_span(b, n, cutoff);
  int k = int(span.size());
  if (k == 0) return Subspace::zero(d);
  std::vector<Frac> below;
  for (const auto& e : span)
    for (const auto& [ex, v] : e)
      if (ex < beta && std::find(below.begin(), below.end(), ex) == below.end()) below.push_back(ex);
  Mat low = Mat::Zero(d * below.size(), k);
  Mat at = Mat::Zero(d, k);
  for (int j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < below.size(); ++r) {
      auto it = span[j].find(below[r]);
      if (it != span[j].end()) low.block(r * d, j, d, 1) = it->second;
    }
    auto it = span[j].find(beta);
    if (it != span[j].end()) at.col(j) = it->second;
  }
  Mat combos = below.empty() ? Mat(Mat::Identity(k, k)) : null_space(low, 1e-10);
  if (combos.cols() == 0) return Subspace::zero(d);
  return Subspace::span(at * combos, 1e-9);
}

namespace {

// Shared loop of the two Hodge formulas; `at` maps (group, p) to F^p H_lambda.
template <class F>
DecFiltration assemble(const AutomorphismParts& parts, int lo_p, int hi_p, F at) {
  int d = int(parts.m.rows());
  DecFiltration f;
  f.top = Subspace::full(d);
  for (int p = lo_p; p <= hi_p; ++p) {
    Subspace acc = Subspace::zero(d);
    for (std::size_t g = 0; g < parts.groups.size(); ++g) acc = acc.sum(at(g, p));
    f.steps[p] = acc;
  }
  return f;
}

void check_sectors(const LatticeBasis& b, const AutomorphismParts& parts) {
  for (const auto& g : b.generators)
    for (const auto& t : g) {
      Eigenvalue lam = Eigenvalue::from_angle(-t.alpha);
      const EigenGroup* grp = parts.find(lam, 1e-6);
      double off = grp ? (t.a - grp->projector * t.a).cwiseAbs().maxCoeff() : t.a.cwiseAbs().maxCoeff();
      if (off > 1e-8 * std::max(1.0, t.a.cwiseAbs().maxCoeff()))
        throw Error(ErrorCode::BadInput, "a section coefficient at exponent " + frac_string(t.alpha) + " is not in H_lambda");
    }
}

template <class G>
DecFiltration lattice_filtration(const LatticeBasis& b, const AutomorphismParts& parts, int m, int cutoff, bool z_side, G op) {
  check_sectors(b, parts);
  Frac emin = min_exponent(b);
  Frac cut(cutoff);
  std::map<std::pair<std::size_t, int>, Subspace> table;
  std::vector<std::pair<int, int>> range(parts.groups.size());
  int lo_all = 1 << 20, hi_all = -(1 << 20);
  for (std::size_t g = 0; g < parts.groups.size(); ++g) {
    Frac alpha = beta_of(parts.groups[g].lambda);
    Frac shift = z_side ? alpha : alpha - 1;
    // F^p sits at exponent m - p + shift; start just below the lowest exponent.
    int p = int(std::floor(frac_to_double(Frac(m) + shift - emin))) + 1;
    range[g].second = p;
    const Subspace& full = parts.groups[g].space;
    for (;; --p) {
      Frac ex = Frac(m - p) + shift;
      if (ex >= cut) throw Error(ErrorCode::TruncationInsufficient, "the filtration does not fill H_lambda below the cutoff");
      Subspace v = gr_v(b, parts.n, ex, cut);
      if (!v.is_zero()) v = op(v, m - p, ex);
      table[{g, p}] = v;
      if (v.dim() == full.dim()) break;
    }
    range[g].first = p;
    lo_all = std::min(lo_all, p);
    hi_all = std::max(hi_all, range[g].second);
  }
  int d = int(parts.m.rows());
  return assemble(parts, lo_all, hi_all, [&](std::size_t g, int p) {
    if (p > range[g].second) return Subspace::zero(d);
    if (p < range[g].first) return parts.groups[g].space;
    return table.at({g, p});
  });
}

}  // namespace

DecFiltration hodge_from_lattice(const LatticeBasis& b, const AutomorphismParts& parts, int m, int cutoff) {
  if (b.z_side) throw Error(ErrorCode::BadInput, "expected a tau-side lattice");
  return lattice_filtration(b, parts, m, cutoff, false, [&](const Subspace& gr, int k, const Frac& ex) {
    int d = int(parts.n.rows());
    Mat op = Mat::Identity(d, d);
    if (k >= 0) {
      for (int j = 0; j < k; ++j) op = (frac_to_double(ex - j) * Mat::Identity(d, d) - parts.n / kTwoPiI) * op;
    } else {
      for (int j = 0; j < -k; ++j) op = (frac_to_double(ex + 1 + j) * Mat::Identity(d, d) - parts.n / kTwoPiI).inverse() * op;
    }
    return gr.apply(op);
  });
}

DecFiltration twisted_hodge_from_lattice(const LatticeBasis& fl, const AutomorphismParts& parts, int m, int cutoff) {
  if (!fl.z_side) throw Error(ErrorCode::BadInput, "expected a z-side lattice");
  return lattice_filtration(fl, parts, m, cutoff, true, [](const Subspace& gr, int, const Frac&) { return gr; });
}

LatticeBasis fl_lattice(const LatticeBasis& b, const Mat& n) {
  LatticeBasis out;
  out.z_side = true;
  for (const auto& g : b.generators) {
    Section s;
    for (const auto& t : g) s.push_back(fl_elementary(t, n));
    out.generators.push_back(s);
  }
  return out;
}

std::map<Frac, Mat> lattice_pairing(const FlatPairing& f, const LatticeBasis& fl) {
  std::map<Frac, Mat> out;
  int k = int(fl.generators.size());
  Mat e = nilpotent_exp(-0.5 * f.n);
  Cx norm = std::pow(kTwoPiI, f.m + 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (const auto& s : fl.generators[i])
        for (const auto& t : fl.generators[j]) {
          Cx c = std::exp(kI * kPi * frac_to_double(t.alpha)) * (s.a.transpose() * f.lnor * e * t.a)(0, 0) / norm;
          Frac pw = s.alpha + t.alpha;
          auto it = out.find(pw);
          if (it == out.end()) it = out.emplace(pw, Mat::Zero(k, k)).first;
          it->second(i, j) += c;
        }
  return out;
}

}  // namespace seif
