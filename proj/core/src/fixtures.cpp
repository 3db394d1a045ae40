#include "hk/fixtures.hpp"

#include <map>

namespace hk {

namespace {

IntMat diag(const std::vector<long>& d) {
    IntMat m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
}

IntMat block_diag(const std::vector<IntMat>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    IntMat m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

IntMat hyperbolic() {
    return IntMat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
}

// -A_n Cartan matrix, negative definite
IntMat neg_a(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = -2;
        if (i + 1 < n) {
            m(i, i + 1) = 1;
            m(i + 1, i) = 1;
        }
    }
    return m;
}

const std::map<std::string, IntMat>& catalog() {
    static const std::map<std::string, IntMat> c = [] {
        std::map<std::string, IntMat> m;
        IntMat u = hyperbolic();
        m["U"] = u;
        m["U+U"] = block_diag({u, u});
        m["U+<-2>"] = block_diag({u, diag({-2})});

        m["rank5-a"] = diag({1, 1, 1, -1, -2});
        m["rank5-b"] = diag({1, 1, 1, -1, -1});
        m["rank5-c"] = diag({1, 1, 1, -2, -3});
        m["rank5-d"] = block_diag({u, diag({1, 1, -1})});
        m["rank5-e"] = block_diag({u, u, diag({-2})});
        m["rank5-f"] = block_diag(
            {IntMat::from_rows({{Int(2), Int(1)}, {Int(1), Int(2)}}), diag({1, -1, -3})});

        m["rank6-a"] = block_diag({u, u, u});
        m["rank6-b"] = diag({1, 1, 1, -1, -1, -1});
        m["rank6-c"] = block_diag({u, diag({1, 1, -1, -2})});
        m["rank6-d"] = diag({2, 3, 5, -1, -7, -11});
        m["rank6-e"] = block_diag({u, u, neg_a(2)});

        m["rank7-a"] = block_diag({u, u, u, diag({-2})});
        m["rank7-b"] = diag({1, 1, 1, -1, -1, -1, -1});
        m["rank7-c"] = block_diag({u, u, diag({1, -1, -5})});
        m["rank7-d"] = diag({1, 2, 3, -4, -5, -6, -7});
        m["rank7-e"] = block_diag(
            {IntMat::from_rows({{Int(2), Int(1), Int(0)},
                                {Int(1), Int(2), Int(1)},
                                {Int(0), Int(1), Int(2)}}),
             diag({-1, -1, -1, -17})});

        m["rank8-a"] = block_diag({u, u, u, u});
        m["rank8-b"] = diag({1, 1, 1, -1, -1, -1, -1, -1});
        m["rank8-c"] = block_diag({u, u, diag({1, -1, -2, -3})});
        m["rank8-d"] = diag({5, 7, 11, -13, -1, -2, -3, -4});
        m["rank8-e"] = block_diag({u, neg_a(6)});
        return m;
    }();
    return c;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, gram] : catalog()) names.push_back(name);
    return names;
}

Lattice load_fixture(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw UnknownFixture(name);
    Lattice lat{name, it->second};
    validate_lattice(lat, false);
    return lat;
}

}  // namespace hk
