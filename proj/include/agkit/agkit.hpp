#ifndef AGKIT_AGKIT_HPP
#define AGKIT_AGKIT_HPP

#include "error.hpp"
#include "limits.hpp"
#include "algebra.hpp"
#include "term.hpp"
#include "axioms.hpp"
#include "congruence.hpp"
#include "morphism.hpp"
#include "variety.hpp"
#include "lemmas.hpp"
#include "amalgamation.hpp"
#include "report.hpp"

#endif
