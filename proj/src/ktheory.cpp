#include "graphck/ktheory.hpp"

#include <utility>

#include "graphck/errors.hpp"

namespace graphck {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) {
        throw InternalError("matrix product shape mismatch");
    }
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols; ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows != m.cols) {
        throw InternalError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows;
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(r, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix reg_matrix(const Graph& g) {
    std::vector<std::size_t> regular;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.is_regular(v)) {
            regular.push_back(v);
        }
    }
    IntMatrix m(g.size(), regular.size());
    for (std::size_t c = 0; c < regular.size(); ++c) {
        std::size_t v = regular[c];
        for (std::size_t y = 0; y < g.size(); ++y) {
            m(y, c) = Integer(g.at(v, y).value());
        }
        m(v, c) -= 1;
    }
    return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols; ++j) {
        std::swap(m(a, j), m(b, j));
    }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::swap(m(i, a), m(i, b));
    }
}

// row dst += q * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols; ++j) {
        m(dst, j) += q * m(src, j);
    }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        m(i, dst) += q * m(i, src);
    }
}

Integer magnitude(const Integer& x) {
    return x < 0 ? Integer(-x) : x;
}

void check_smith(const IntMatrix& m, const SmithForm& f) {
    if (f.U * m * f.V != f.S) {
        throw InternalError("Smith form: U*M*V != S");
    }
    if (magnitude(determinant(f.U)) != 1 || magnitude(determinant(f.V)) != 1) {
        throw InternalError("Smith form: transform is not unimodular");
    }
    for (std::size_t i = 0; i < f.S.rows; ++i) {
        for (std::size_t j = 0; j < f.S.cols; ++j) {
            if (i != j && f.S(i, j) != 0) {
                throw InternalError("Smith form: off-diagonal entry");
            }
        }
    }
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.S(i, i) <= 0) {
            throw InternalError("Smith form: nonpositive invariant factor");
        }
        if (i + 1 < f.rank && f.S(i + 1, i + 1) % f.S(i, i) != 0) {
            throw InternalError("Smith form: divisibility chain broken");
        }
    }
    for (std::size_t i = f.rank; i < std::min(f.S.rows, f.S.cols); ++i) {
        if (f.S(i, i) != 0) {
            throw InternalError("Smith form: nonzero entry past the rank");
        }
    }
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols), 0};
    IntMatrix& S = f.S;
    const std::size_t n = S.rows;
    const std::size_t k = S.cols;
    std::size_t t = 0;
    auto bring_smallest = [&](bool whole_block) {
        bool found = false;
        std::size_t bi = t;
        std::size_t bj = t;
        Integer best;
        for (std::size_t i = t; i < n; ++i) {
            for (std::size_t j = t; j < k; ++j) {
                if (!whole_block && i != t && j != t) {
                    continue;
                }
                if (S(i, j) != 0 && (!found || magnitude(S(i, j)) < best)) {
                    found = true;
                    best = magnitude(S(i, j));
                    bi = i;
                    bj = j;
                }
            }
        }
        if (found) {
            swap_rows(S, t, bi);
            swap_rows(f.U, t, bi);
            swap_cols(S, t, bj);
            swap_cols(f.V, t, bj);
        }
        return found;
    };
    while (t < std::min(n, k) && bring_smallest(true)) {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (S(i, t) != 0) {
                    Integer q = S(i, t) / S(t, t);
                    add_row(S, i, t, -q);
                    add_row(f.U, i, t, -q);
                    clean = clean && S(i, t) == 0;
                }
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (S(t, j) != 0) {
                    Integer q = S(t, j) / S(t, t);
                    add_col(S, j, t, -q);
                    add_col(f.V, j, t, -q);
                    clean = clean && S(t, j) == 0;
                }
            }
            if (!clean) {
                bring_smallest(false);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i) {
                for (std::size_t j = t + 1; j < k; ++j) {
                    if (S(i, j) % S(t, t) != 0) {
                        add_row(S, t, i, 1);
                        add_row(f.U, t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (S(t, t) < 0) {
            add_row(f.U, t, t, -2);
            add_row(S, t, t, -2);
        }
        ++t;
    }
    f.rank = t;
    check_smith(m, f);
    return f;
}

KTheoryPair k_groups(const Graph& g) {
    IntMatrix m = reg_matrix(g);
    SmithForm f = smith_normal_form(m);
    KTheoryPair p;
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.S(i, i) > 1) {
            p.k0_invariant_factors.push_back(f.S(i, i));
        }
    }
    p.k0_free_rank = m.rows - f.rank;
    p.k1_free_rank = m.cols - f.rank;
    return p;
}

bool K0Class::is_zero() const {
    for (const auto& r : residues) {
        if (r != 0) {
            return false;
        }
    }
    return true;
}

namespace {

Integer reduce_mod(const Integer& x, const Integer& d) {
    if (d == 0) {
        return x;
    }
    Integer r = x % d;
    return r < 0 ? Integer(r + d) : r;
}

} // namespace

K0Class operator+(const K0Class& a, const K0Class& b) {
    if (a.moduli != b.moduli) {
        throw DomainError("K0 classes from different presentations");
    }
    K0Class c{a.residues, a.moduli};
    for (std::size_t i = 0; i < c.residues.size(); ++i) {
        c.residues[i] = reduce_mod(a.residues[i] + b.residues[i], c.moduli[i]);
    }
    return c;
}

K0Presentation::K0Presentation(const Graph& g) {
    SmithForm f = smith_normal_form(reg_matrix(g));
    U_ = std::move(f.U);
    moduli_.assign(U_.rows, Integer(0));
    for (std::size_t i = 0; i < f.rank; ++i) {
        moduli_[i] = f.S(i, i);
    }
}

K0Class K0Presentation::reduce(const std::vector<Integer>& x) const {
    if (x.size() != U_.cols) {
        throw ValidationError("K0 vector has " + std::to_string(x.size()) + " entries for " +
                              std::to_string(U_.cols) + " vertices");
    }
    K0Class c{std::vector<Integer>(U_.rows), moduli_};
    for (std::size_t i = 0; i < U_.rows; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < U_.cols; ++j) {
            s += U_(i, j) * x[j];
        }
        c.residues[i] = reduce_mod(s, moduli_[i]);
    }
    return c;
}

K0Class K0Presentation::zero() const {
    return K0Class{std::vector<Integer>(U_.rows), moduli_};
}

K0Class k0_reduce(const Graph& g, const std::vector<Integer>& x) {
    return K0Presentation(g).reduce(x);
}

} // namespace graphck
