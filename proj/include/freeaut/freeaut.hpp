#ifndef FREEAUT_FREEAUT_HPP
#define FREEAUT_FREEAUT_HPP

#include "freeaut/errors.hpp"
#include "freeaut/word.hpp"
#include "freeaut/whitehead_graph.hpp"
#include "freeaut/automorphism.hpp"
#include "freeaut/rational.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/stabilizer.hpp"
#include "freeaut/quasimorphism.hpp"
#include "freeaut/certify.hpp"
#include "freeaut/family.hpp"

#endif  // FREEAUT_FREEAUT_HPP
