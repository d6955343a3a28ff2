#pragma once

// Umbrella header.

#include "hgs/enumerator.hpp"
#include "hgs/error.hpp"
#include "hgs/forcing.hpp"
#include "hgs/fp_linalg.hpp"
#include "hgs/group_table.hpp"
#include "hgs/groups.hpp"
#include "hgs/modular.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/parallel.hpp"
#include "hgs/perm.hpp"
#include "hgs/perm_group.hpp"
#include "hgs/report.hpp"
#include "hgs/s40.hpp"
#include "hgs/wreath.hpp"
