#pragma once

// Umbrella header.

#include "charzero/cli.hpp"
#include "charzero/cyclotomic.hpp"
#include "charzero/dixon.hpp"
#include "charzero/error.hpp"
#include "charzero/finite_field.hpp"
#include "charzero/groups.hpp"
#include "charzero/number_theory.hpp"
#include "charzero/perm_group.hpp"
#include "charzero/permutation.hpp"
#include "charzero/props.hpp"
