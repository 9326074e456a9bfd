#pragma once

#include "splitmerge/core.hpp"
#include "splitmerge/species.hpp"
#include "splitmerge/matgraph.hpp"
#include "splitmerge/vine.hpp"
#include "splitmerge/domain.hpp"
#include "splitmerge/correspond.hpp"
#include "splitmerge/canonical.hpp"
#include "splitmerge/lattice.hpp"
#include "splitmerge/enumerate.hpp"
#include "splitmerge/io.hpp"
#include "splitmerge/catalog.hpp"
