#pragma once

// Umbrella header.

#include "kqsym/appendix.hpp"
#include "kqsym/basis_matrix.hpp"
#include "kqsym/composition.hpp"
#include "kqsym/core.hpp"
#include "kqsym/document.hpp"
#include "kqsym/kostka.hpp"
#include "kqsym/linear_combination.hpp"
#include "kqsym/partition.hpp"
#include "kqsym/schur_system.hpp"
#include "kqsym/verify.hpp"
