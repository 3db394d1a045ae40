#include "hk/isotropy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hk {

namespace {

void sign_normalize(IntVec& v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

// Integer solutions of a x^2 + b x + c = 0. All means "no constraint".
struct RootSet {
    enum Kind { None, Some, All } kind = None;
    std::vector<Int> roots;
};

RootSet solve_quadratic(const Int& a, const Int& b, const Int& c) {
    if (a == 0) {
        if (b == 0) return {c == 0 ? RootSet::All : RootSet::None, {}};
        if (c % b != 0) return {};
        return {RootSet::Some, {Int(-c / b)}};
    }
    Int disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    // congruence sieve: squares are 0, 1 or 4 mod 8
    unsigned long m8 = mpz_fdiv_ui(disc.get_mpz_t(), 8);
    if (m8 != 0 && m8 != 1 && m8 != 4) return {};
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return {};
    Int s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    RootSet rs{RootSet::Some, {}};
    Int den = 2 * a;
    for (int sign : {-1, +1}) {
        Int num = -b + sign * s;
        if (num % den == 0) rs.roots.push_back(Int(num / den));
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
    return rs;
}

// Depth-first odometer over one max-norm shell. Visits sign-normalized
// representatives in lexicographic order; the last coordinate is solved
// exactly from the configured linear and quadratic constraints instead of
// being scanned.
class ShellWalker {
public:
    explicit ShellWalker(const IntMat& gram)
        : g_(gram), n_(gram.rows()), v_(n_, 0), sdot_(n_, 0) {}

    void add_linear(IntVec w) { linear_.push_back({std::move(w), Int(0)}); }
    void set_isotropic(bool b) { isotropic_ = b; }

    bool walk(const Int& m, const std::function<bool(const IntVec&)>& visit) {
        m_ = m;
        visit_ = &visit;
        std::fill(v_.begin(), v_.end(), Int(0));
        std::fill(sdot_.begin(), sdot_.end(), Int(0));
        qpart_ = 0;
        for (auto& l : linear_) l.partial = 0;
        nonzero_count_ = 0;
        max_count_ = 0;
        return n_ > 0 && rec(0);
    }

private:
    struct Linear {
        IntVec w;
        Int partial;
    };

    void push(int d, const Int& x) {
        qpart_ += g_(d, d) * x * x + 2 * x * sdot_[d];
        for (int j = 0; j < n_; ++j) sdot_[j] += g_(j, d) * x;
        for (auto& l : linear_) l.partial += l.w[d] * x;
        if (x != 0) ++nonzero_count_;
        if (mpz_cmpabs(x.get_mpz_t(), m_.get_mpz_t()) == 0) ++max_count_;
    }

    void pop(int d, const Int& x) {
        if (mpz_cmpabs(x.get_mpz_t(), m_.get_mpz_t()) == 0) --max_count_;
        if (x != 0) --nonzero_count_;
        for (auto& l : linear_) l.partial -= l.w[d] * x;
        for (int j = 0; j < n_; ++j) sdot_[j] -= g_(j, d) * x;
        qpart_ -= g_(d, d) * x * x + 2 * x * sdot_[d];
    }

    bool accept_last(const Int& x) {
        if (mpz_cmpabs(x.get_mpz_t(), m_.get_mpz_t()) > 0) return false;
        if (max_count_ == 0 && mpz_cmpabs(x.get_mpz_t(), m_.get_mpz_t()) != 0)
            return false;  // must complete the shell
        if (nonzero_count_ == 0 && x <= 0) return false;  // sign representative
        v_[n_ - 1] = x;
        return (*visit_)(v_);
    }

    bool last_level() {
        const int d = n_ - 1;
        bool scan_all = true;
        std::vector<Int> cands;
        auto restrict = [&](const std::vector<Int>& s) {
            if (scan_all) {
                scan_all = false;
                cands = s;
                return;
            }
            std::vector<Int> merged;
            for (const auto& x : cands)
                if (std::find(s.begin(), s.end(), x) != s.end()) merged.push_back(x);
            cands = std::move(merged);
        };
        for (const auto& l : linear_) {
            if (l.w[d] == 0) {
                if (l.partial != 0) return false;
                continue;
            }
            if (l.partial % l.w[d] != 0) return false;
            restrict({Int(-l.partial / l.w[d])});
        }
        if (isotropic_) {
            RootSet rs = solve_quadratic(g_(d, d), Int(2 * sdot_[d]), qpart_);
            if (rs.kind == RootSet::None) return false;
            if (rs.kind == RootSet::Some) restrict(rs.roots);
        }
        if (scan_all) {
            for (Int x = -m_; x <= m_; ++x)
                if (accept_last(x)) return true;
            return false;
        }
        for (const auto& x : cands)
            if (accept_last(x)) return true;
        return false;
    }

    bool rec(int d) {
        if (d == n_ - 1) return last_level();
        for (Int x = -m_; x <= m_; ++x) {
            if (nonzero_count_ == 0 && x < 0) continue;
            push(d, x);
            v_[d] = x;
            bool stop = rec(d + 1);
            pop(d, x);
            if (stop) return true;
        }
        return false;
    }

    const IntMat& g_;
    int n_;
    Int m_;
    const std::function<bool(const IntVec&)>* visit_ = nullptr;
    IntVec v_;
    std::vector<Int> sdot_;
    Int qpart_ = 0;
    std::vector<Linear> linear_;
    bool isotropic_ = false;
    int nonzero_count_ = 0;
    int max_count_ = 0;
};

SearchResult run_shells(ShellWalker& w, long height,
                        const std::function<bool(const IntVec&)>& visit) {
    IntVec found;
    auto wrapped = [&](const IntVec& v) {
        if (!visit(v)) return false;
        found = v;
        return true;
    };
    for (long m = 1; m <= height; ++m)
        if (w.walk(Int(m), wrapped)) return SearchResult::found(found);
    return SearchResult::not_found();
}

void require_isotropic(const Lattice& lat, const IntVec& delta) {
    if (delta.size() != size_t(lat.rank()))
        throw DimensionMismatch("vector length does not match lattice rank");
    if (is_zero_vec(delta)) throw ZeroVector("delta is zero");
    Int q = pair(lat, delta, delta);
    if (q != 0) throw NotIsotropic("pair(delta,delta) = " + q.get_str());
}

}  // namespace

SearchResult find_isotropic(const Lattice& lat, long height) {
    Signature sig = signature(lat);  // throws DegenerateForm
    if (sig.positive == 0 || sig.negative == 0) return SearchResult::nonexistence();
    ShellWalker w(lat.gram);
    w.set_isotropic(true);
    return run_shells(w, height, [](const IntVec& v) { return vec_gcd(v) == 1; });
}

SearchResult find_polarization(const Lattice& lat, const IntVec& delta, long height) {
    require_isotropic(lat, delta);
    ShellWalker w(lat.gram);
    w.add_linear(lat.gram.mul(delta));
    return run_shells(w, height,
                      [&](const IntVec& v) { return pair(lat, v, v) > 0; });
}

SearchResult find_second_isotropic(const Lattice& lat, const IntVec& delta, long height) {
    require_isotropic(lat, delta);
    IntVec d0 = primitivize(delta).first;
    sign_normalize(d0);
    ShellWalker w(lat.gram);
    w.set_isotropic(true);
    return run_shells(w, height, [&](const IntVec& v) {
        return vec_gcd(v) == 1 && v != d0;
    });
}

SearchResult find_transvection_companion(const Lattice& lat, const IntVec& delta,
                                         long height) {
    if (is_zero_vec(delta)) throw ZeroVector("delta is zero");
    ShellWalker w(lat.gram);
    w.add_linear(lat.gram.mul(delta));
    return run_shells(w, height, [&](const IntVec& v) {
        Int q = pair(lat, v, v);
        return q != 0 && q % 2 == 0;
    });
}

std::vector<IntVec> isotropic_shell(const Lattice& lat, const Int& m) {
    ShellWalker w(lat.gram);
    w.set_isotropic(true);
    std::vector<IntVec> out;
    w.walk(m, [&](const IntVec& v) {
        if (vec_gcd(v) == 1) out.push_back(v);
        return false;
    });
    return out;
}

CuspPartition cusp_orbit_partition(const Lattice& lat,
                                   const std::optional<IntVec>& polarization,
                                   const std::vector<Isometry>& generators,
                                   long height, int depth) {
    for (size_t i = 0; i < generators.size(); ++i) {
        if (!is_isometry(lat, generators[i].matrix))
            throw GeneratorNotIsometry("generator " + std::to_string(i + 1));
        if (polarization && generators[i].matrix.mul(*polarization) != *polarization)
            throw GeneratorMovesPolarization("generator " + std::to_string(i + 1));
    }

    CuspPartition out;
    {
        ShellWalker w(lat.gram);
        w.set_isotropic(true);
        if (polarization) w.add_linear(lat.gram.mul(*polarization));
        for (long m = 1; m <= height; ++m)
            w.walk(Int(m), [&](const IntVec& v) {
                if (vec_gcd(v) == 1) out.points.push_back(v);
                return false;
            });
    }

    std::map<IntVec, int> index;
    for (size_t i = 0; i < out.points.size(); ++i) index[out.points[i]] = int(i);

    std::vector<IntMat> letters;
    std::vector<int> letter_ids;
    for (size_t i = 0; i < generators.size(); ++i) {
        letters.push_back(generators[i].matrix);
        letter_ids.push_back(int(i) + 1);
        letters.push_back(isometry_inverse(generators[i]).matrix);
        letter_ids.push_back(-(int(i) + 1));
    }

    std::vector<int> parent(out.points.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find_root = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    for (int s = 0; s < int(out.points.size()); ++s) {
        std::map<IntVec, std::vector<int>> visited;
        std::vector<IntVec> frontier{out.points[s]};
        visited[out.points[s]] = {};
        for (int step = 1; step <= depth; ++step) {
            std::vector<IntVec> next;
            for (const auto& u : frontier) {
                const std::vector<int> base = visited[u];
                for (size_t li = 0; li < letters.size(); ++li) {
                    IntVec x = letters[li].mul(u);
                    sign_normalize(x);
                    if (visited.count(x)) continue;
                    std::vector<int> word = base;
                    word.push_back(letter_ids[li]);
                    visited[x] = word;
                    auto it = index.find(x);
                    if (it != index.end()) {
                        int t = it->second;
                        int rs = find_root(s), rt = find_root(t);
                        if (rs != rt) {
                            parent[rt] = rs;
                            out.witnesses.push_back({s, t, word});
                        }
                    }
                    next.push_back(std::move(x));
                }
            }
            frontier = std::move(next);
        }
    }

    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < int(out.points.size()); ++i)
        by_root[find_root(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& [root, members] : by_root) classes.push_back(members);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.classes = std::move(classes);
    return out;
}

}  // namespace hk
