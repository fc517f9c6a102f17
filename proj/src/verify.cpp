#include "lefschetz/verify.hpp"

#include <sstream>

#include "lefschetz/combinat.hpp"
#include "lefschetz/detformula.hpp"
#include "lefschetz/oracle.hpp"
#include "lefschetz/syzgap.hpp"

namespace lefschetz {

namespace {

void tuples_rec(int n, int dmin, int dmax, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n + 1) {
        out.push_back(cur);
        return;
    }
    const int hi = cur.empty() ? dmax : cur.back();
    for (int v = hi; v >= dmin; --v) {
        cur.push_back(v);
        tuples_rec(n, dmin, dmax, cur, out);
        cur.pop_back();
    }
}

std::string degrees_flag(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

std::vector<std::vector<int>> enumerate_tuples(int n, int dmin, int dmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (n >= 1 && dmin <= dmax) tuples_rec(n, dmin, dmax, cur, out);
    return out;
}

SweepReport verify_det_vs_oracle(int nmax, int dmax, int dmin) {
    SweepReport report;
    for (int n = 2; n <= nmax; ++n) {
        for (const auto& raw : enumerate_tuples(n, dmin, dmax)) {
            if (raw[0] < 2) continue;  // at least one honest generator
            const DegreeTuple d = DegreeTuple::normalize(raw);
            const int t = d.socle_degree();
            if (t % 2 == 0 || d[0] > (t + 1) / 2) continue;

            const DeterminantReport formula = proctor_determinant(d);
            const BigInt brute = nilp_determinant_bruteforce(d);
            ++report.checked;
            if (abs(brute) != formula.magnitude.to_integer()) {
                report.disagreements.push_back(
                    {"formula magnitude " + formula.magnitude.to_string() +
                         " vs brute determinant " + brute.str() + " for " + d.to_string(),
                     "lefschetz det --degrees " + degrees_flag(raw) +
                         " --allow-unit --bruteforce"});
                continue;
            }
            for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(t))) {
                ++report.checked;
                const bool det_says_fails = formula.bad_primes.count(p) > 0;
                const bool oracle_fails =
                    has_wlp_oracle(d, Characteristic::of(p)).is_fails();
                if (det_says_fails != oracle_fails) {
                    std::ostringstream os;
                    os << "tuple " << d.to_string() << " at p=" << p << ": determinant says "
                       << (det_says_fails ? "fails" : "holds") << ", oracle says "
                       << (oracle_fails ? "fails" : "holds");
                    report.disagreements.push_back(
                        {os.str(), "lefschetz wlp --degrees " + degrees_flag(raw) +
                                       " --char " + std::to_string(p) +
                                       " --allow-unit --method oracle"});
                }
            }
        }
    }
    return report;
}

SweepReport verify_classify_vs_oracle(int nmax, int dmax, std::uint64_t pmax) {
    SweepReport report;
    std::vector<std::uint64_t> chars{0};
    for (std::uint64_t p : primes_up_to(pmax)) chars.push_back(p);
    const ClassifyOptions no_fallback{false};

    for (int n = 1; n <= nmax; ++n) {
        for (const auto& raw : enumerate_tuples(n, 2, dmax)) {
            const DegreeTuple d = DegreeTuple::normalize(raw);
            for (std::uint64_t p : chars) {
                const Characteristic ch = Characteristic::of(p);
                for (bool strong : {false, true}) {
                    Classified c = strong ? classify_slp(d, ch, no_fallback)
                                          : classify_wlp(d, ch, no_fallback);
                    if (c.verdict.status == Status::unknown) {
                        ++report.undecided;
                        continue;
                    }
                    ++report.checked;
                    Verdict o = strong ? has_slp_oracle(d, ch) : has_wlp_oracle(d, ch);
                    if (o.status != c.verdict.status) {
                        std::ostringstream os;
                        os << (strong ? "slp" : "wlp") << " " << d.to_string() << " p=" << p
                           << ": cascade (" << c.verdict.method << ") says "
                           << to_string(c.verdict.status) << ", oracle says "
                           << to_string(o.status);
                        report.disagreements.push_back(
                            {os.str(), std::string("lefschetz ") + (strong ? "slp" : "wlp") +
                                           " --degrees " + degrees_flag(raw) + " --char " +
                                           std::to_string(p) + " --method oracle"});
                    }
                }
            }
        }
    }
    return report;
}

SweepReport verify_mgd_vs_oracle(int nmax, int dmax,
                                 const std::vector<std::uint64_t>& characteristics) {
    SweepReport report;
    for (int n = 2; n <= nmax; ++n) {
        for (const auto& raw : enumerate_tuples(n, 2, dmax)) {
            const DegreeTuple d = DegreeTuple::normalize(raw);
            for (std::uint64_t p : characteristics) {
                const Characteristic ch = Characteristic::of(p);
                ++report.checked;
                const Verdict via_rank = has_wlp_oracle(d, ch);
                const Verdict via_mgd = has_wlp_via_mgd(d, ch);
                if (via_rank.status != via_mgd.status) {
                    std::ostringstream os;
                    os << "wlp " << d.to_string() << " p=" << p << ": rank oracle says "
                       << to_string(via_rank.status) << ", syzygy degree bound says "
                       << to_string(via_mgd.status);
                    report.disagreements.push_back(
                        {os.str(), "lefschetz verify --mode mgd-vs-oracle --n " +
                                       std::to_string(n) + " --dmax " + std::to_string(dmax)});
                }
            }
        }
    }
    return report;
}

SweepReport verify_syzgap_vs_oracle(int abcmax, const std::vector<std::uint64_t>& primes) {
    SweepReport report;
    for (int a = 1; a <= abcmax; ++a) {
        for (int b = a; b <= abcmax; ++b) {
            for (int c = b; c <= abcmax; ++c) {
                if (c >= a + b) continue;  // unstable: the criterion does not apply
                for (std::uint64_t p : primes) {
                    ++report.checked;
                    const Verdict gap = wlp_three_gen_via_syzgap(a, b, c, p);
                    const DegreeTuple d = DegreeTuple::normalize({a, b, c});
                    const Verdict oracle = has_wlp_oracle(d, Characteristic::of(p));
                    if (gap.status != oracle.status) {
                        std::ostringstream os;
                        os << "triple (" << a << ',' << b << ',' << c << ") p=" << p
                           << ": syzygy gap says " << to_string(gap.status)
                           << ", oracle says " << to_string(oracle.status);
                        report.disagreements.push_back(
                            {os.str(),
                             "lefschetz wlp --degrees " + degrees_flag(d.degrees()) +
                                 " --char " + std::to_string(p) + " --allow-unit" +
                                 " --method oracle"});
                    }
                }
            }
        }
    }

    // The alternating family (a, b) = (2^m l, 2^m + 1): in characteristic two
    // the member (a, b, a+b-2-2k) fails exactly for 1 <= k <= b-3.
    for (auto [m, l] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}}) {
        const int a = (1 << m) * l;
        const int b = (1 << m) + 1;
        for (int k = 0; k <= b - 2; ++k) {
            ++report.checked;
            const int c = a + b - 2 - 2 * k;
            const bool expect_fails = 1 <= k && k <= b - 3;
            const Verdict gap = wlp_three_gen_via_syzgap(a, b, c, 2);
            if (gap.is_fails() != expect_fails) {
                std::ostringstream os;
                os << "alternating family (" << a << ',' << b << ',' << c << ") k=" << k
                   << ": expected " << (expect_fails ? "fails" : "holds") << ", got "
                   << to_string(gap.status);
                report.disagreements.push_back(
                    {os.str(), "lefschetz wlp --degrees " +
                                   degrees_flag(DegreeTuple::normalize({a, b, c}).degrees()) +
                                   " --char 2 --method syzgap"});
            }
        }
    }
    return report;
}

SweepReport verify_conjectures(int nmin, int nmax, int dmax) {
    SweepReport report;
    const ConjectureReport c = check_conjectures(nmin, nmax, dmax);
    report.checked = c.midpoint_checked + c.smalltop_checked;
    for (const auto& obs : c.midpoint_counterexamples)
        report.disagreements.push_back(
            {"midpoint conjecture: " + obs.detail + " at " +
                 DegreeTuple::normalize(obs.degrees).to_string() + " p=" +
                 std::to_string(obs.prime),
             "lefschetz wlp --degrees " + degrees_flag(obs.degrees) + " --char " +
                 std::to_string(obs.prime) + " --method oracle"});
    for (const auto& obs : c.smalltop_counterexamples)
        report.disagreements.push_back(
            {"small-top conjecture: " + obs.detail + " at " +
                 DegreeTuple::normalize(obs.degrees).to_string() + " p=" +
                 std::to_string(obs.prime),
             "lefschetz slp --degrees " + degrees_flag(obs.degrees) + " --char " +
                 std::to_string(obs.prime) + " --method oracle"});
    return report;
}

SweepReport verify_cross_routes(int nmax, int dmax,
                                const std::vector<std::uint64_t>& characteristics) {
    SweepReport report;
    for (int n = 1; n <= nmax; ++n) {
        for (const auto& raw : enumerate_tuples(n, 2, dmax)) {
            const DegreeTuple d = DegreeTuple::normalize(raw);
            for (std::uint64_t p : characteristics) {
                const Characteristic ch = Characteristic::of(p);

                ++report.checked;
                const Verdict by_def = has_slp_oracle(d, ch);
                const Verdict by_family = slp_via_wlp_family(
                    d, ch, [](const DegreeTuple& e, Characteristic c2) {
                        return has_wlp_oracle(e, c2);
                    });
                if (by_def.status != by_family.status)
                    report.disagreements.push_back(
                        {"slp " + d.to_string() + " p=" + std::to_string(p) +
                             ": definition vs extension family disagree",
                         "lefschetz slp --degrees " + degrees_flag(raw) + " --char " +
                             std::to_string(p) + " --method oracle"});

                if (n >= 2) {
                    ++report.checked;
                    const Verdict via_rank = has_wlp_oracle(d, ch);
                    const Verdict via_mgd = has_wlp_via_mgd(d, ch);
                    if (via_rank.status != via_mgd.status)
                        report.disagreements.push_back(
                            {"wlp " + d.to_string() + " p=" + std::to_string(p) +
                                 ": rank oracle vs syzygy degree bound disagree",
                             "lefschetz wlp --degrees " + degrees_flag(raw) + " --char " +
                                 std::to_string(p) + " --method oracle"});
                }
            }
        }
    }
    return report;
}

}  // namespace lefschetz
