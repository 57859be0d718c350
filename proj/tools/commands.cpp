#include "commands.hpp"

#include "polya/bounds.hpp"
#include "polya/functionals.hpp"
#include "polya/wedges.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace cli {

using namespace polya;

Range parse_range(const std::string& s) {
  auto to_long = [&](const std::string& part) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed range: " + s);
    }
    if (used != part.size()) throw UsageError("malformed range: " + s);
    return v;
  };
  Range r;
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_long(s);
  } else {
    r.lo = to_long(s.substr(0, dots));
    r.hi = to_long(s.substr(dots + 2));
  }
  if (r.hi < r.lo) throw UsageError("empty range: " + s);
  return r;
}

Manifold RunConfig::manifold() const {
  switch (kind) {
    case Kind::Sphere:
      return Manifold::sphere(n);
    case Kind::Hemisphere:
      return Manifold::hemisphere(n);
    case Kind::Wedge:
      return Manifold::wedge(n, p);
  }
  return Manifold::hemisphere(n);
}

RealCtx RunConfig::ctx() const {
  RealCtx c(bits);
  if (tol) c.set_tolerance(*tol);
  return c;
}

namespace {

// Rows for indices lo..hi, computed on `jobs` threads over contiguous blocks and
// concatenated in index order.
template <class F>
std::vector<Row> parallel_rows(long lo, long hi, int jobs, F make) {
  const long count = hi - lo + 1;
  if (count <= 0) return {};
  const long workers = std::max(1L, std::min<long>(jobs, count));
  std::vector<std::vector<Row>> parts(static_cast<size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  auto run = [&](long w) {
    try {
      const long a = lo + w * count / workers, b = lo + (w + 1) * count / workers;
      for (long i = a; i < b; ++i) {
        std::vector<Row> rs = make(i);
        for (auto& r : rs) parts[static_cast<size_t>(w)].push_back(std::move(r));
      }
    } catch (...) {
      errors[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (long w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Row> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

const Range& need_k(const RunConfig& c) {
  if (!c.k_range) throw UsageError("--k A..B is required");
  return *c.k_range;
}

const Range& need_K(const RunConfig& c) {
  if (!c.K_range) throw UsageError("--K A..B is required");
  return *c.K_range;
}

void require_enumerable(const Manifold& m) {
  if (m.kind == Kind::Wedge) throw UsageError("wedge spectra are not enumerated; use the wedge command");
}

void check_k(const Manifold& m, const Range& r) {
  if (r.lo < m.first_k()) throw UsageError("k range starts below " + std::to_string(m.first_k()));
}

void check_K(const Manifold& m, const Range& r) {
  if (r.lo < m.first_K()) throw UsageError("K range starts below " + std::to_string(m.first_K()));
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i];
  return s;
}

Cell optional_K(const std::optional<long>& K) { return K ? exact(*K) : empty(); }

}  // namespace

Outcome cmd_spectrum(const RunConfig& c) {
  const Manifold m = c.manifold();
  require_enumerable(m);
  Outcome o;
  o.table.command = "spectrum";
  o.table.columns = {"k", "K", "j", "lambda", "mult", "k_minus", "k_plus"};
  auto row = [](const BigInt& k, const Chain& ch, const BigInt& j) {
    return Row{exact(k), exact(ch.K), exact(j), exact(ch.lambda), exact(ch.mult), exact(ch.k_minus),
               exact(ch.k_plus)};
  };
  if (c.k_range) {
    check_k(m, *c.k_range);
    o.table.rows = parallel_rows(c.k_range->lo, c.k_range->hi, c.jobs, [&](long k) {
      OrderLookup at = chain_of_order(m, k);
      return std::vector<Row>{row(k, at.chain, at.j)};
    });
  } else {
    const Range& r = need_K(c);
    check_K(m, r);
    o.table.rows = parallel_rows(r.lo, r.hi, c.jobs, [&](long K) {
      Chain ch = chain(m, K);
      return std::vector<Row>{row(ch.k_minus, ch, 1)};
    });
  }
  return o;
}

Outcome cmd_check_polya(const RunConfig& c) {
  const Manifold m = c.manifold();
  require_enumerable(m);
  const RealCtx ctx = c.ctx();
  const WeylConstant cw = weyl_constant(m, ctx);
  Outcome o;
  o.table.command = "check-polya";
  o.table.columns = {"K", "k", "lambda", "weyl_term", "margin", "verdict", "chain_position"};

  auto row_for = [&](const Chain& ch, const BigInt& k) {
    Real weyl = rational_power(ctx, cw.base * BigRational(k), 2, m.n);
    const bool ok = polya_sign(m, k) != Sign::negative;
    std::string pos = k == ch.k_minus ? (k == ch.k_plus ? "both" : "k_minus") : (k == ch.k_plus ? "k_plus" : "interior");
    return Row{exact(ch.K), exact(k), exact(ch.lambda), real(weyl, ctx.bits()),
               real(ctx(ch.lambda) - weyl, ctx.bits()), flag(ok), text(pos)};
  };

  if (c.k_range) {
    check_k(m, *c.k_range);
    o.table.rows = parallel_rows(c.k_range->lo, c.k_range->hi, c.jobs, [&](long k) {
      return std::vector<Row>{row_for(chain_of_order(m, k).chain, k)};
    });
  } else {
    const Range& r = need_K(c);
    check_K(m, r);
    o.table.rows = parallel_rows(r.lo, r.hi, c.jobs, [&](long K) {
      Chain ch = chain(m, K);
      std::vector<Row> rows{row_for(ch, ch.k_minus)};
      if (ch.k_plus != ch.k_minus) rows.push_back(row_for(ch, ch.k_plus));
      return rows;
    });
  }

  // Per-mode summaries over chain-extreme rows (column 0 = K, 5 = verdict, 6 = position).
  struct Mode {
    std::optional<long> first_fail, first_hold, last_fail;
  } lowest, highest;
  bool all_hold = true;
  for (const Row& r : o.table.rows) {
    const long K = std::stol(r[0].text);
    const bool ok = r[5].text == "true";
    all_hold = all_hold && ok;
    const std::string& pos = r[6].text;
    for (auto [mode, match] : {std::pair{&lowest, pos == "k_minus" || pos == "both"},
                               std::pair{&highest, pos == "k_plus" || pos == "both"}}) {
      if (!match) continue;
      if (ok && !mode->first_hold) mode->first_hold = K;
      if (!ok) {
        if (!mode->first_fail) mode->first_fail = K;
        mode->last_fail = K;
      }
    }
  }
  auto stable_from = [&](const Mode& md) -> Cell {
    if (!md.first_hold) return empty();
    return exact(md.last_fail ? *md.last_fail + 1 : *md.first_hold);
  };
  o.table.summary = {{"all_hold", flag(all_hold)},
                     {"lowest_order_first_fail_K", optional_K(lowest.first_fail)},
                     {"lowest_order_first_hold_K", optional_K(lowest.first_hold)},
                     {"lowest_order_holds_from_K", stable_from(lowest)},
                     {"highest_order_first_fail_K", optional_K(highest.first_fail)},
                     {"highest_order_first_hold_K", optional_K(highest.first_hold)}};
  return o;
}

Outcome cmd_bounds(const RunConfig& c) {
  const Manifold m = c.manifold();
  require_enumerable(m);
  const RealCtx ctx = c.ctx();
  const Range& r = need_k(c);
  check_k(m, r);

  std::vector<std::string> names = c.names;
  if (names.empty()) {
    for (const auto& nm : bound_names()) {
      const bool sphere_name = nm.rfind("sphere_", 0) == 0;
      if (sphere_name != (m.kind == Kind::Sphere)) continue;
      if (nm == "thmD_upper" && m.n != 3 && m.n != 4) continue;
      names.push_back(nm);
    }
  }
  std::vector<BoundSpec> specs;
  for (const auto& nm : names) {
    try {
      specs.push_back(make_bound(m, nm, ctx));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  Outcome o;
  o.table.command = "bounds";
  o.table.columns = {"name", "k", "lambda", "bound", "margin", "holds", "equality", "exact", "chain_position"};
  for (const BoundSpec& spec : specs) {
    auto rows = parallel_rows(r.lo, r.hi, c.jobs, [&](long k) {
      BoundReport b = eval_bound(spec, k, ctx);
      return std::vector<Row>{{text(spec.name), exact(b.k), exact(*b.eigenvalue), real(b.bound_value, ctx.bits()),
                               real(*b.margin, ctx.bits()), flag(b.holds), flag(b.is_equality), flag(b.exact),
                               text(to_string(b.at_chain_extreme))}};
    });
    std::vector<std::string> equalities;
    long failures = 0;
    for (const Row& row : rows) {
      if (row[6].text == "true") equalities.push_back(row[1].text);
      if (row[5].text == "false") ++failures;
    }
    // thmC is only a claim for n = 2, 5, 6 (with k_n = 1).
    const bool claimed = spec.name != "thmC_upper" || m.n == 2 || m.n == 5 || m.n == 6;
    if (claimed && failures > 0) o.exit_code = 1;
    o.table.summary.push_back({"failures_" + spec.name, exact(failures)});
    o.table.summary.push_back({"equalities_" + spec.name, text(join(equalities))});
    for (auto& row : rows) o.table.rows.push_back(std::move(row));
  }
  return o;
}

Outcome cmd_certify(const RunConfig& c) {
  Outcome o;
  o.table.command = "certify";
  o.table.columns = {"term", "power", "coefficient"};
  Certificate cert;
  if (c.certificate == "qn") {
    cert = q_n_poly(c.n);
  } else if (c.certificate == "qtheta") {
    cert = q_theta_poly(c.n);
  } else if (c.certificate == "mr") {
    if (c.order < 1 || c.order % 2 == 0) throw UsageError("--order must be odd and positive");
    cert = mr_taylor_certificate(c.n, c.order);
  } else {
    throw UsageError("choose one of --qn, --qtheta, --mr");
  }

  bool all_positive = true;
  if (cert.kind == CertificateKind::MRTaylor) {
    for (int d = static_cast<int>(cert.M.size()) - 1; d >= 0; --d)
      o.table.rows.push_back({text("M"), exact(long{d}), exact(cert.M[static_cast<size_t>(d)])});
    for (size_t t = 1; t < cert.R.size(); ++t)
      o.table.rows.push_back({text("R"), exact(-static_cast<long>(t)), exact(cert.R[t])});
    for (size_t t = 1; t < cert.B.size(); ++t)
      o.table.rows.push_back({text("B"), exact(static_cast<long>(t)), exact(cert.B[t])});
    o.table.summary.push_back({"l", exact(long{cert.l})});
    o.table.summary.push_back({"y_star", cert.y_star ? exact(*cert.y_star) : text("none")});
  } else {
    const std::string var = cert.kind == CertificateKind::QnK ? "K" : "y";
    for (int d = 0; d <= cert.poly.degree(); ++d) {
      o.table.rows.push_back({text(var), exact(long{d}), exact(cert.poly.coeff(d))});
      if (cert.poly.coeff(d).sign() <= 0) all_positive = false;
    }
  }
  o.table.summary.push_back({"n", exact(long{c.n})});
  o.table.summary.push_back({"degree", exact(long{cert.poly.degree()})});
  o.table.summary.push_back({"leading_coefficient", exact(cert.poly.leading())});
  o.table.summary.push_back({"leading_sign", text(cert.poly.leading().sign() > 0 ? "positive" : "negative")});
  if (cert.kind != CertificateKind::MRTaylor)
    o.table.summary.push_back({"all_coefficients_positive", flag(all_positive)});
  return o;
}

Outcome cmd_averages(const RunConfig& c) {
  const Manifold m = c.manifold();
  require_enumerable(m);
  const RealCtx ctx = c.ctx();
  Outcome o;
  o.table.command = "averages";
  const bool hemi = m.kind == Kind::Hemisphere;
  if (c.k_range) {
    if (!hemi) throw UsageError("total averages are defined on the hemisphere");
    check_k(m, *c.k_range);
    o.table.columns = {"k", "total_average", "total_average_exact"};
    o.table.rows = parallel_rows(c.k_range->lo, c.k_range->hi, c.jobs, [&](long k) {
      auto ex = total_average_exact(m.n, k);
      return std::vector<Row>{{exact(k), real(total_average(m.n, k, ctx), ctx.bits()), ex ? exact(*ex) : empty()}};
    });
    return o;
  }
  const Range& r = need_K(c);
  check_K(m, r);
  o.table.columns = {"K", "k_minus", "k_plus", "chain_average", "chain_average_exact", "peak_k", "peak_total_average"};
  o.table.rows = parallel_rows(r.lo, r.hi, c.jobs, [&](long K) {
    Chain ch = chain(m, K);
    auto ex = chain_average_exact(m, K);
    Row row{exact(K), exact(ch.k_minus), exact(ch.k_plus), real(chain_average(m, K, ctx), ctx.bits()),
            ex ? exact(*ex) : empty()};
    if (hemi) {
      AveragePeak pk = total_average_chain_peak(m.n, K, ctx);
      row.push_back(exact(pk.k));
      row.push_back(real(pk.value, ctx.bits()));
    } else {
      row.push_back(empty());
      row.push_back(empty());
    }
    return std::vector<Row>{row};
  });
  std::optional<long> last_negative;
  for (const Row& row : o.table.rows) {
    const long K = std::stol(row[0].text);
    if (K >= 2 && row[3].text.front() == '-') last_negative = K;
  }
  o.table.summary.push_back({"chain_average_nonnegative_from_K",
                             exact(last_negative ? *last_negative + 1 : std::max(2L, r.lo))});
  return o;
}

Outcome cmd_scan_theta(const RunConfig& c) {
  const RealCtx ctx = c.ctx();
  const Range& r = need_K(c);
  if (r.lo < 1) throw UsageError("K range starts below 1");
  const int n = c.n;
  const Manifold h = Manifold::hemisphere(n);
  const Polynomial q = q_theta_poly(n).poly;
  Outcome o;
  o.table.command = "scan-theta";
  o.table.columns = {"K", "k_minus", "theta", "theta_minus_2", "theta_prime_sign", "qtheta_sign"};
  o.table.rows = parallel_rows(r.lo, r.hi, c.jobs, [&](long K) {
    Real t = theta(n, K, ctx);
    const int qs = q(BigRational(K - 1)).sign();
    return std::vector<Row>{{exact(K), exact(chain(h, K).k_minus), real(t, ctx.bits()), real(t - 2L, ctx.bits()),
                             text(to_string(theta_derivative_sign(n, K))),
                             text(qs > 0 ? "positive" : (qs < 0 ? "negative" : "zero"))}};
  });
  // Recompute the maximum exactly at the working precision.
  long best_K = r.lo;
  Real best = theta(n, r.lo, ctx);
  std::optional<long> turning;
  for (const Row& row : o.table.rows) {
    const long K = std::stol(row[0].text);
    if (!turning && row[4].text == "negative") turning = K;
  }
  for (long K = r.lo + 1; K <= r.hi; ++K) {
    Real t = theta(n, K, ctx);
    if (t > best) {
      best = t;
      best_K = K;
    }
  }
  o.table.summary = {{"theta_max", real(best, ctx.bits())},
                     {"theta_max_over_2", real(best / 2L, ctx.bits())},
                     {"argmax_K", exact(best_K)},
                     {"argmax_k", exact(chain(h, best_K).k_minus)},
                     {"theta_prime_turns_negative_at_K", optional_K(turning)}};
  return o;
}

Outcome cmd_wedge(const RunConfig& c) {
  const RealCtx ctx = c.ctx();
  const Range& r = need_k(c);
  if (r.lo < 1) throw UsageError("k range starts below 1");
  if (c.n < 2 || c.p < 1) throw UsageError("wedge needs n >= 2 and p >= 1");
  Outcome o;
  o.table.command = "wedge";
  o.table.columns = {"k", "pk", "lambda_pk", "wedge_floor", "margin", "holds", "equality", "one_term_bound",
                     "one_term_exact"};
  const std::vector<TransferRow> transfer = tiling_transfer_check(c.n, c.p, r.hi, ctx);
  o.table.rows = parallel_rows(r.lo, r.hi, c.jobs, [&](long k) {
    const TransferRow& t = transfer[static_cast<size_t>(k - 1)];
    OneTermWedge w = wedge_one_term_bound(c.n, c.p, k, ctx);
    return std::vector<Row>{{exact(t.k), exact(t.pk), exact(t.lambda_pk), real(t.floor, ctx.bits()),
                             real(t.margin, ctx.bits()), flag(t.holds), flag(t.is_equality),
                             real(w.report.bound_value, ctx.bits()), w.exact_value ? exact(*w.exact_value) : empty()}};
  });
  std::vector<std::string> eq;
  bool all = true;
  for (const Row& row : o.table.rows) {
    if (row[6].text == "true") eq.push_back(row[0].text);
    all = all && row[5].text == "true";
  }
  if (!all) o.exit_code = 1;
  o.table.summary = {{"all_hold", flag(all)}, {"equality_k", text(join(eq))}};
  return o;
}

}  // namespace cli
