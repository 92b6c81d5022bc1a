#pragma once

// Umbrella header: bicovariant bimodules and first-order differential
// calculi on function algebras of finite groups via representations of the
// Drinfeld double, with Hochschild-cohomological classification and
// Yang–Baxter matrix generation.

#include "bicov/bimodule.hpp"
#include "bicov/calculus.hpp"
#include "bicov/cohomology.hpp"
#include "bicov/drinfeld.hpp"
#include "bicov/errors.hpp"
#include "bicov/group.hpp"
#include "bicov/hopf.hpp"
#include "bicov/io.hpp"
#include "bicov/linalg.hpp"
#include "bicov/verify.hpp"
