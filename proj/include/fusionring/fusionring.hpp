#pragma once

#include "fusionring/error.hpp"
#include "fusionring/checked.hpp"
#include "fusionring/ring.hpp"
#include "fusionring/axioms.hpp"
#include "fusionring/subring.hpp"
#include "fusionring/theorem.hpp"
#include "fusionring/cyclotomic.hpp"
#include "fusionring/chartable.hpp"
#include "fusionring/generators.hpp"
#include "fusionring/spec_io.hpp"
#include "fusionring/enumerate.hpp"
#include "fusionring/report.hpp"
