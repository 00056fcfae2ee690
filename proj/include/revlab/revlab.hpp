#pragma once

#include "revlab/analysis.hpp"
#include "revlab/composition.hpp"
#include "revlab/correspondence.hpp"
#include "revlab/evolution.hpp"
#include "revlab/nls.hpp"
#include "revlab/phase.hpp"
#include "revlab/polynomial.hpp"
#include "revlab/rational.hpp"
#include "revlab/revival.hpp"
#include "revlab/state.hpp"
#include "revlab/theta.hpp"
#include "revlab/transforms.hpp"
#include "revlab/version.hpp"
