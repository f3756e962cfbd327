#pragma once

#include <string>

#include "topolab/domains.hpp"
#include "topolab/space.hpp"

namespace topolab {

// Hasse reduction of the specialization preorder as a DOT digraph. Points
// equivalent under the preorder are merged into one node listing all labels.
std::string to_dot(const FiniteSpace& x);
std::string to_dot(const FinitePoset& p);

}  // namespace topolab
