#pragma once

#include "detvar/bi_proj_class.hpp"
#include "detvar/cache.hpp"
#include "detvar/classes.hpp"
#include "detvar/cli.hpp"
#include "detvar/document.hpp"
#include "detvar/lagrangian.hpp"
#include "detvar/microlocal.hpp"
#include "detvar/proj_class.hpp"
#include "detvar/scan.hpp"
#include "detvar/schubert.hpp"
#include "detvar/tables.hpp"
