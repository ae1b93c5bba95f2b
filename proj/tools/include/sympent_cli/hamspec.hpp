//! @file hamspec.hpp
//! Mini-syntax for per-factor Hamiltonians on the command line: a
//! comma-separated list with one entry per subsystem, each either a Pauli
//! name (I, X, Y, Z; qubit factors only) or a matrix literal like
//! [[0,1],[1,0]] with complex entries ("1+2i", "0.5i", "-1"). Factors are
//! projected onto their traceless part (the trace only shifts the global
//! phase).
#pragma once

#include <string>

#include "sympent/localalg.hpp"

namespace sympent {

LocalHamiltonian parse_local_hamiltonian(const std::string& text, const std::vector<int>& dims);

}  // namespace sympent
