#pragma once

#include <cstddef>

#include "arrtool/presentation.hpp"

namespace arrtool {

struct TietzeOptions {
  /// Maximum number of generator eliminations.
  std::size_t budget = 1000;
  /// Eliminations that would push any relator past this length are skipped.
  std::size_t max_relator_length = 400;
};

/// Freely and cyclically reduces relators, drops trivial and repeated ones
/// (up to rotation and inversion), and eliminates generators that occur
/// exactly once in some relator. Deterministic.
GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& options = {});

/// Rotation/inversion-invariant key of a cyclic word.
std::string cyclic_key(const Word& w);

/// True if `w` is x y x^-1 y^-1 up to rotation and inversion, x != y generators.
bool is_generator_commutator(const Word& w);

}  // namespace arrtool
