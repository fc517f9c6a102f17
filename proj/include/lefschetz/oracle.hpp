#ifndef LEFSCHETZ_ORACLE_HPP
#define LEFSCHETZ_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lefschetz/combinat.hpp"
#include "lefschetz/core.hpp"

namespace lefschetz {

// The matrix of x ell^power : [A]_from -> [A]_{from+power} for the quotient
// by the pure powers, in the canonical monomial order of weak_compositions.
// Rows are indexed by the target monomials, columns by the source monomials,
// so the matrix acts on coordinate columns; the entry at (target b, source a)
// is binom(power; b - a) when a <= b componentwise, else 0.  Entries are kept
// as exact integers and reduced into the field only when ranks are taken.
struct GradedMatrix {
    std::vector<WeakComposition> rows;  // target monomials, degree from+power
    std::vector<WeakComposition> cols;  // source monomials, degree from
    std::vector<BigInt> entries;        // row-major, rows.size() x cols.size()

    int from_degree = 0;
    int power = 1;
    std::uint64_t characteristic = 0;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return cols.size(); }
    const BigInt& at(std::size_t r, std::size_t c) const {
        return entries[r * cols.size() + c];
    }
};

// bounds[i] = d_i - 1 for the quotient by (x_0^{d_0}, ..., x_n^{d_n}).
GradedMatrix mult_map_matrix(const std::vector<int>& degrees, Characteristic ch,
                             int from_degree, int power);
GradedMatrix mult_map_matrix(const DegreeTuple& d, Characteristic ch,
                             int from_degree, int power);

// Exact rank: row reduction over F_p, fraction-free elimination over the
// integers for characteristic zero.
std::size_t rank(const GradedMatrix& m);

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);
std::size_t rank_integer(std::vector<std::vector<BigInt>> m);
// Signed determinant of a square integer matrix (Bareiss).
BigInt determinant_integer(std::vector<std::vector<BigInt>> m);

// Multiplication by ell = x_0 + ... + x_n has maximal rank between every pair
// of consecutive graded pieces.  Witness on failure: least failing source
// degree.
Verdict has_wlp_oracle(const DegreeTuple& d, Characteristic ch);

// Strong Lefschetz via the strong Stanley bijections: x ell^{t-2k} from
// degree k to degree t-k is bijective for 0 <= k <= floor(t/2).  Witness on
// failure: least failing k, with the power t-2k.
Verdict has_slp_oracle(const DegreeTuple& d, Characteristic ch);

// The full definition (every degree, every power), for cross-checking the
// strong Stanley shortcut on demand.
Verdict has_slp_oracle_full(const DegreeTuple& d, Characteristic ch);

// Exact rank profile of x ell: entry e is the rank from degree e to e+1.
std::vector<std::size_t> wlp_rank_profile(const DegreeTuple& d, Characteristic ch);

// Least degree e <= cap at which the syzygies of
// (ell^{d_0}, x_1^{d_1}, ..., x_n^{d_n}) in S = K[x_1..x_n] strictly exceed
// the Koszul subspace, by exact kernel-dimension comparison; nullopt if none.
std::optional<int> mgd_nonkoszul(const DegreeTuple& d, Characteristic ch, int cap);

// Weak Lefschetz via the syzygy degree bound: holds iff no non-Koszul syzygy
// exists in degree <= floor((t+3)/2) - 1.
Verdict has_wlp_via_mgd(const DegreeTuple& d, Characteristic ch);

}  // namespace lefschetz

#endif
