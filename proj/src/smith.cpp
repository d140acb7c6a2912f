#include "conicbundle/smith.hpp"

#include <algorithm>
#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(int a, int b, const Integer& q) {
    if (q == 0) return;
    for (int j = 0; j < cols_; ++j) (*this)(a, j) += q * (*this)(b, j);
}

void IntMatrix::add_col_multiple(int a, int b, const Integer& q) {
    if (q == 0) return;
    for (int i = 0; i < rows_; ++i) (*this)(i, a) += q * (*this)(i, b);
}

void IntMatrix::negate_row(int a) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return Integer(1);
    IntMatrix m = *this;
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return Integer(0);
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Integer det = m(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

std::string IntMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : " ";
        for (int j = 0; j < cols_; ++j) {
            out += conicbundle::to_string((*this)(i, j));
            if (j + 1 < cols_) out += " ";
        }
        out += i + 1 < rows_ ? "\n" : "]";
    }
    return out;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    int n = std::min(diagonal.rows(), diagonal.cols());
    for (int i = 0; i < n; ++i) {
        if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
    }
    return out;
}

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Smallest nonzero entry by absolute value in the submatrix d[s.., s..];
// small pivots keep the coefficient growth down.
bool find_pivot(const IntMatrix& d, int s, int& pi, int& pj) {
    bool found = false;
    Integer best;
    for (int i = s; i < d.rows(); ++i) {
        for (int j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Integer a = abs_value(d(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& d = out.diagonal;
    IntMatrix& u = out.left;
    IntMatrix& v = out.right;

    int steps = std::min(a.rows(), a.cols());
    for (int s = 0; s < steps; ++s) {
        int pi = 0, pj = 0;
        if (!find_pivot(d, s, pi, pj)) break;  // remaining submatrix is zero
        d.swap_rows(s, pi);
        u.swap_rows(s, pi);
        d.swap_cols(s, pj);
        v.swap_cols(s, pj);

        for (;;) {
            // clear column s below the pivot
            bool reduced = true;
            for (int i = s + 1; i < d.rows(); ++i) {
                if (d(i, s) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, s).get_mpz_t(), d(s, s).get_mpz_t());
                d.add_row_multiple(i, s, -q);
                u.add_row_multiple(i, s, -q);
                if (d(i, s) != 0) reduced = false;
            }
            // clear row s right of the pivot
            for (int j = s + 1; j < d.cols(); ++j) {
                if (d(s, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(s, j).get_mpz_t(), d(s, s).get_mpz_t());
                d.add_col_multiple(j, s, -q);
                v.add_col_multiple(j, s, -q);
                if (d(s, j) != 0) reduced = false;
            }
            if (!reduced) {
                // nonzero remainders left; re-pick the smaller pivot
                if (!find_pivot(d, s, pi, pj)) break;
                d.swap_rows(s, pi);
                u.swap_rows(s, pi);
                d.swap_cols(s, pj);
                v.swap_cols(s, pj);
                continue;
            }
            // pivot divides all remaining entries, or a fix-up row merge is needed
            bool divides = true;
            for (int i = s + 1; i < d.rows() && divides; ++i) {
                for (int j = s + 1; j < d.cols() && divides; ++j) {
                    if (d(i, j) % d(s, s) != 0) {
                        d.add_row_multiple(s, i, Integer(1));
                        u.add_row_multiple(s, i, Integer(1));
                        divides = false;
                    }
                }
            }
            if (divides) break;
        }
        if (d(s, s) < 0) {
            d.negate_row(s);
            u.negate_row(s);
        }
    }
    return out;
}

}  // namespace conicbundle
