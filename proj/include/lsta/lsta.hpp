#ifndef LSTA_LSTA_HPP
#define LSTA_LSTA_HPP

#include "lsta/amplitude.hpp"
#include "lsta/automaton.hpp"
#include "lsta/benchmarks.hpp"
#include "lsta/emptiness.hpp"
#include "lsta/errors.hpp"
#include "lsta/format.hpp"
#include "lsta/gates.hpp"
#include "lsta/inclusion.hpp"
#include "lsta/membership.hpp"
#include "lsta/operations.hpp"
#include "lsta/param_gates.hpp"
#include "lsta/predicates.hpp"
#include "lsta/qasm.hpp"
#include "lsta/tree.hpp"
#include "lsta/verify.hpp"

#endif  // LSTA_LSTA_HPP
