// Acceptance suite: one PASS/FAIL line per criterion.

#include "golden.hpp"
#include "shiftchaos/chaos.hpp"
#include "shiftchaos/conjugacy.hpp"
#include "shiftchaos/errors.hpp"
#include "shiftchaos/negative.hpp"
#include "shiftchaos/random.hpp"
#include "shiftchaos/spectral.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace shiftchaos;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

std::vector<OperatorSpec> shift_combos(const Scalar& w) {
  return {OperatorSpec::bounded_shift(IndexBase::One, w), OperatorSpec::bounded_shift(IndexBase::Zero, w),
          OperatorSpec::unbounded_shift(IndexBase::One, w), OperatorSpec::unbounded_shift(IndexBase::Zero, w)};
}

std::string label(const OperatorSpec& s) {
  return std::string(to_string(s.variant())) + "/" + std::string(to_string(s.base()));
}

const std::vector<Scalar>& weights() {
  static const std::vector<Scalar> ws = {Scalar(2), Scalar(Rational(3, 2)), Scalar(Rational(5, 2)),
                                         Scalar::parse("1+i")};
  return ws;
}

Result right_inverse() {
  gen::Gen g(1001);
  Index checked = 0;
  for (const OperatorSpec& spec : shift_combos(Scalar(Rational(3, 2)))) {
    for (int i = 0; i < 1000; ++i) {
      const FinSeq x = g.finseq(spec.base(), 50);
      if (!(apply(spec, right_inverse(spec, x)) == x)) return {false, label(spec) + " sample " + std::to_string(i)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " vectors"};
}

Result norm_bruteforce() {
  Index checked = 0;
  for (const Scalar& w : {Scalar(2), Scalar::parse("1+i")}) {
    for (const OperatorSpec& spec : shift_combos(w)) {
      for (Index n = 1; n <= 10; ++n) {
        // brute force over the test-side reference operator
        Rational best(0);
        for (Index m = first_index(spec.base()); m <= 200; ++m) {
          best = std::max(best, oracle::sup_sq(oracle::B_pow(spec.is_bounded(), spec.base(), w, n,
                                                              oracle::vec_of(basis_vector(spec.base(), m)))));
        }
        if (opnorm_Bn(spec, n).squared != best ||
            opnorm_bruteforce(spec, PowerPath::Backward, n, 200) != best) {
          return {false, label(spec) + " n=" + std::to_string(n)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " (spec, n) pairs"};
}

Result witnesses(std::string& note) {
  const Scalar w(2);
  const auto spec = OperatorSpec::unbounded_shift(IndexBase::One, w);
  Index literal_ok = 0, corrected_ok = 0, total = 0;
  std::string first_bad;
  for (Index n = 1; n <= 10; ++n) {
    for (Index m = 1; m <= 10; ++m) {
      ++total;
      const Rational direct =
          oracle::sup_sq(oracle::A_pow(false, IndexBase::One, w, n, oracle::vec_of(basis_vector(IndexBase::One, n + m))));
      const Rational literal = pow(w.norm_sq(), (m + n) * (m + n - 1) / 2);
      if (direct == literal) {
        ++literal_ok;
      } else if (first_bad.empty()) {
        first_bad = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
      }
      corrected_ok += direct == unboundedness_witness(spec, n, m).squared &&
                      direct == pow(w.norm_sq(), n * m + n * (n - 1) / 2);
    }
  }
  note = "|A^n e_{n+m}|^2 = |w|^{n(2m+n-1)} holds for " + std::to_string(corrected_ok) + "/" +
         std::to_string(total) + " pairs; the literal exponent (m+n)(m+n-1) only matches at m = 1";
  if (literal_ok == total) return {true, std::to_string(total) + " pairs"};
  return {false, "literal formula holds for " + std::to_string(literal_ok) + "/" + std::to_string(total) +
                     " pairs, first mismatch at " + first_bad};
}

Result closed_forms() {
  gen::Gen g(1004);
  Index checked = 0;
  for (const OperatorSpec& spec : shift_combos(Scalar(Rational(5, 2)))) {
    for (int i = 0; i < 200; ++i) {
      const FinSeq x = g.finseq(spec.base(), 12);
      const Index n = g.range(1, 20);
      const auto v = oracle::vec_of(x);
      if (!(power(spec, n, x) == oracle::finseq_of(spec.base(), oracle::A_pow(spec.is_bounded(), spec.base(), spec.w(), n, v))) ||
          !(right_inverse_power(spec, n, x) ==
            oracle::finseq_of(spec.base(), oracle::B_pow(spec.is_bounded(), spec.base(), spec.w(), n, v))) ||
          !(power(spec, n, x) == power_by_iteration(spec, n, x))) {
        return {false, label(spec) + " n=" + std::to_string(n)};
      }
      ++checked;
    }
  }
  for (const OperatorSpec& H : {OperatorSpec::bounded_hat(Scalar(Rational(5, 2))), OperatorSpec::unbounded_hat(Scalar(Rational(5, 2)))}) {
    for (int i = 0; i < 200; ++i) {
      const ConvSeq x = g.convseq(12);
      const Index n = g.range(1, 20);
      if (!(hat_power(H, n, x) == hat_power_by_iteration(H, n, x))) {
        return {false, std::string(to_string(H.variant())) + " n=" + std::to_string(n)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " inputs"};
}

Result conjugacy() {
  gen::Gen g(1005);
  Index checked = 0;
  for (const Scalar& w : {Scalar(2), Scalar::parse("1+i")}) {
    for (const OperatorSpec& H : {OperatorSpec::bounded_hat(w), OperatorSpec::unbounded_hat(w)}) {
      for (int i = 0; i < 500; ++i) {
        const ConvSeq x = g.convseq(10, !w.is_real());
        const Index n = g.range(1, 10);
        if (!oracle::same(oracle::hat_pow(H.is_bounded(), w, n, oracle::cvec_of(x)), hat_power(H, n, x)) ||
            !conjugation_oracle(H, n, x).equal) {
          return {false, std::string(to_string(H.variant())) + " n=" + std::to_string(n)};
        }
        const FinSeq y = g.finseq(IndexBase::Zero, 10, !w.is_real());
        if (!(J_inv(J(x)) == x) || !(J(J_inv(y)) == y)) return {false, "J round trip"};
        if (sup_norm(J(x)).squared > 4 * sup_norm_conv(x).squared) return {false, "norm bound for J"};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " samples"};
}

std::vector<Scalar> lambda_grid() {
  std::vector<Scalar> grid;
  for (long k = -12; k <= 12; ++k) {
    Rational q(k, 4);
    q.canonicalize();
    grid.emplace_back(q);
  }
  return grid;
}

Result eigen() {
  Index point = 0, rejected = 0;
  for (const Scalar& w : weights()) {
    const auto U = OperatorSpec::unbounded_shift(IndexBase::One, w);
    const auto Bd = OperatorSpec::bounded_shift(IndexBase::One, w);
    for (const Scalar& lambda : lambda_grid()) {
      const SpectrumVerdict u = classify_spectrum(U, lambda);
      if (u.cls != SpectralClass::Point || !u.kernel || eigen_residual(U, lambda, *u.kernel, 500) != 0) {
        return {false, "unbounded w=" + w.str() + " lambda=" + lambda.str()};
      }
      ++point;
      const bool inside = lambda.norm_sq() < w.norm_sq();
      const SpectrumVerdict b = classify_spectrum(Bd, lambda);
      if (inside) {
        if (b.cls != SpectralClass::Point || eigen_residual(Bd, lambda, *b.kernel, 500) != 0) {
          return {false, "bounded w=" + w.str() + " lambda=" + lambda.str()};
        }
        ++point;
      } else {
        bool threw = false;
        try {
          eigenvector(Bd, lambda);
        } catch (const NotAnEigenvalue&) {
          threw = true;
        }
        if (b.cls == SpectralClass::Point || !threw) return {false, "bounded w=" + w.str() + " accepted lambda=" + lambda.str()};
        ++rejected;
      }
    }
  }
  return {true, std::to_string(point) + " zero residuals to K=500, " + std::to_string(rejected) +
                    " bounded non-eigenvalues rejected"};
}

Result periodic() {
  gen::Gen g(1007);
  Index built = 0;
  for (const OperatorSpec& spec : shift_combos(Scalar(2))) {
    const ShiftSystem sys(spec);
    for (Index N = 1; N <= 10; ++N) {
      const FinSeq prefix = g.finseq(spec.base(), N);
      const PeriodicPoint p = build_periodic_point(sys, prefix, N, 500);
      const PerNResult r = per_N_membership(sys, p.seq, N, 500);
      if (!r.member || sgn(r.max_residual_sq) != 0 || p.verified_up_to != 500) {
        return {false, label(spec) + " N=" + std::to_string(N)};
      }
      ++built;
    }
  }
  const Rational tol(mpz_class(1), mpz_class("1000000000000"));
  Index dens = 0;
  for (int i = 0; i < 100; ++i) {
    const OperatorSpec spec = shift_combos(Scalar(2))[i % 4];
    const ShiftSystem sys(spec);
    const FinSeq z = g.finseq(spec.base(), 6);
    const PeriodicDensity d = periodic_density_demo(sys, z, tol, 300);
    // independent tail: sup of |p_k|^2 past the prefix, read off the built sequence
    Rational tail(0);
    const Index P = d.point.period;
    for (Index k = first_index(spec.base()) + P; k <= 300; ++k) tail = std::max(tail, d.point.seq(k).norm_sq());
    if (d.tail_sq > tol || tail != d.tail_sq) return {false, label(spec) + " target " + std::to_string(i)};
    ++dens;
  }
  return {true, std::to_string(built) + " periodic points, " + std::to_string(dens) + " density targets"};
}

Result orbits() {
  gen::Gen g(1008);
  Index visits = 0;
  for (int i = 0; i < 1000; ++i) {
    const OperatorSpec spec = shift_combos(Scalar(Rational(3, 2)))[i % 4];
    const ShiftSystem sys(spec);
    const FinSeq x0 = g.finseq(spec.base(), 8), z = g.finseq(spec.base(), 8);
    const Index m = std::max<Index>(1, x0.span()) + g.range(0, 4);
    const VisitCertificate v = orbit_visit(sys, x0, z, m);
    const auto again = oracle::A_pow(spec.is_bounded(), spec.base(), spec.w(), m, oracle::vec_of(v.vector));
    if (sgn(v.residual_sq) != 0 || !(oracle::finseq_of(spec.base(), again) == z)) {
      return {false, "visit " + std::to_string(i)};
    }
    ++visits;
  }
  const Rational tol(mpz_class(1), mpz_class("1000000000000"));
  Index batches = 0;
  for (const Scalar& w : {Scalar(2), Scalar(Rational(3, 2))}) {
    for (const OperatorSpec& spec : shift_combos(w)) {
      const ShiftSystem sys(spec);
      for (int b = 0; b < 5; ++b) {
        std::vector<FinSeq> ts;
        for (int j = 0; j < 3; ++j) ts.push_back(g.finseq(spec.base(), 5));
        const HypercyclicSchedule s = hypercyclic_schedule(sys, ts, tol);
        for (std::size_t j = 0; j < ts.size(); ++j) {
          const auto img = oracle::A_pow(spec.is_bounded(), spec.base(), w, s.times[j], oracle::vec_of(s.vector));
          oracle::Vec diff = img;
          for (const auto& [k, v] : ts[j].entries()) diff[k] = oracle::get(diff, k) - v;
          if (oracle::sup_sq(diff) != s.residuals_sq[j] || s.residuals_sq[j] > tol) {
            return {false, label(spec) + " batch " + std::to_string(b)};
          }
        }
        ++batches;
      }
    }
  }
  return {true, std::to_string(visits) + " visits, " + std::to_string(batches) + " schedules"};
}

Result scc() {
  std::string detail;
  for (const OperatorSpec& spec : shift_combos(Scalar(Rational(3, 2)))) {
    const SccReport r = verify_scc(ShiftSystem(spec), 100, 20, kDefaultSeed);
    if (!r.passed() || r.samples.size() != 100) return {false, label(spec) + " did not pass"};
  }
  gen::Gen g(1009);
  std::vector<FinSeq> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(g.finseq(IndexBase::One, 8));
  const PowerMap id = [](Index, const FinSeq& x) { return x; };
  if (verify_scc_pair("identity", id, id, samples, 20).passed()) return {false, "identity control passed"};
  return {true, "4 variants x 100 samples pass; identity control fails"};
}

Result negative() {
  gen::Gen g(1010);
  const std::vector<Scalar> ws = {Scalar(2), Scalar(Rational(3, 2)), Scalar(Rational(-5, 2)), Scalar::parse("1+i"),
                                  Scalar(7)};
  Index range_ok = 0, rejected = 0;
  for (int i = 0; i < 10000; ++i) {
    const Scalar& w = ws[i % ws.size()];
    const ConvSeq x = g.convseq(10, !w.is_real());
    // (A - wI)x by definition, read at the first index past the support
    const Index far = x.deviation().max_support() + 1;
    const Scalar tail = w * x.at(far + 1) - w * x.at(far);
    if (!range_limit_check(w, x).is_zero() || !tail.is_zero()) return {false, "range sample " + std::to_string(i)};
    ++range_ok;
  }
  for (int i = 0; i < 500; ++i) {
    const Scalar& w = ws[i % ws.size()];
    const ConvSeq x(g.nonzero(!w.is_real()), g.finseq(IndexBase::One, 10, !w.is_real()));
    const DomainWitness d = domain_forces_vanishing(w, x);
    if (d.status != DomainStatus::NotInDomain || !d.growth || d.growth->min_ratio_sq <= 1 ||
        d.growth->min_ratio_sq != w.norm_sq()) {
      return {false, "planted sample " + std::to_string(i)};
    }
    ++rejected;
  }
  return {true, std::to_string(range_ok) + " range limits 0, " + std::to_string(rejected) +
                    " nonzero limits rejected with growth evidence"};
}

Result quasinilpotence() {
  const Scalar w(2);
  for (const IndexBase b : {IndexBase::One, IndexBase::Zero}) {
    const auto spec = OperatorSpec::unbounded_shift(b, w);
    const auto rows = quasinilpotence_table(spec, 30);
    for (const QuasinilpotenceRow& r : rows) {
      const Index num = b == IndexBase::One ? -(r.n + 1) : -(r.n - 1);
      Rational expected(mpz_class(num), mpz_class(2));
      expected.canonicalize();
      // ||B^n||^2 = 2^{2 n exponent}, checked against basis-vector brute force
      Rational brute(0);
      for (Index m = first_index(b); m <= 40; ++m) {
        brute = std::max(brute, oracle::sup_sq(oracle::B_pow(false, b, w, r.n, oracle::vec_of(basis_vector(b, m)))));
      }
      if (r.exponent != expected || brute != pow(Rational(2), num * r.n)) {
        return {false, std::string(to_string(b)) + " n=" + std::to_string(r.n)};
      }
    }
  }
  return {true, "n <= 30, both index bases"};
}

Result golden_corpus() {
  const std::string dir = SHIFTCHAOS_GOLDEN_DIR;
  const auto cases = golden::load(dir);
  if (cases.size() != 15) return {false, "expected 15 recorded commands, found " + std::to_string(cases.size())};
  Index codes[3] = {0, 0, 0};
  for (const golden::Case& c : cases) {
    const golden::Outcome o = golden::run(c);
    const std::string problem = golden::check(dir, o);
    if (!problem.empty()) return {false, c.name + ": " + problem};
    if (o.exit_code >= 0 && o.exit_code <= 2) ++codes[o.exit_code];
  }
  return {true, "15 commands byte-identical (exit 0: " + std::to_string(codes[0]) +
                    ", exit 2: " + std::to_string(codes[2]) + ")"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Result(std::string&)> run;
  };
  auto plain = [](Result (*f)()) { return [f](std::string&) { return f(); }; };
  const std::vector<Criterion> criteria = {
      {"right inverse A(Bx) = x", plain(right_inverse)},
      {"closed-form norm of B^n equals brute force", plain(norm_bruteforce)},
      {"unboundedness witnesses |A^n e_{n+m}|^2 = |w|^{(m+n)(m+n-1)}", witnesses},
      {"closed-form powers equal n-fold application", plain(closed_forms)},
      {"conjugacy: closed forms on c equal J^-1 A^n J", plain(conjugacy)},
      {"eigenvectors: exact zero residual on the lambda grid", plain(eigen)},
      {"periodic points and periodic density", plain(periodic)},
      {"orbit visits and hypercyclic schedules", plain(orbits)},
      {"sufficient condition for chaos", plain(scc)},
      {"extensions to c: range and domain inside c0", plain(negative)},
      {"quasinilpotence exponents", plain(quasinilpotence)},
      {"CLI golden corpus and exit codes", plain(golden_corpus)},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    Result r;
    try {
      r = criteria[i].run(note);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].title << " -- "
              << r.detail << " [" << time.str() << "s]\n";
    if (!note.empty()) std::cout << "      note: " << note << '\n';
    failed += !r.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
