#pragma once

#include "weylm/bruhat.hpp"
#include "weylm/cartan_type.hpp"
#include "weylm/conjugacy.hpp"
#include "weylm/differential.hpp"
#include "weylm/element.hpp"
#include "weylm/error.hpp"
#include "weylm/oracle.hpp"
#include "weylm/report.hpp"
#include "weylm/root_system.hpp"
#include "weylm/weyl.hpp"
#include "weylm/wm.hpp"
