#pragma once

#include "orbicalc/catalog.hpp"
#include "orbicalc/confun.hpp"
#include "orbicalc/confun_suite.hpp"
#include "orbicalc/confun_verify.hpp"
#include "orbicalc/cyclotomic.hpp"
#include "orbicalc/epoly.hpp"
#include "orbicalc/group.hpp"
#include "orbicalc/invariants.hpp"
#include "orbicalc/matrix.hpp"
#include "orbicalc/model.hpp"
#include "orbicalc/model_io.hpp"
#include "orbicalc/rational.hpp"
#include "orbicalc/report.hpp"
#include "orbicalc/sectors.hpp"
