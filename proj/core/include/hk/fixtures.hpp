#pragma once

#include <string>
#include <vector>

#include "hk/lattice.hpp"

namespace hk {

// Built-in Gram matrix catalog: U, U+U, U+<-2>, and indefinite lattices of
// rank 5 through 8 (several of signature (3, rank-3)).
std::vector<std::string> fixture_names();

// Throws UnknownFixture for names outside the catalog.
Lattice load_fixture(const std::string& name);

}  // namespace hk
