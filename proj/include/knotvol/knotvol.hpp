#pragma once

#include "knotvol/batch.hpp"
#include "knotvol/bounds.hpp"
#include "knotvol/chains.hpp"
#include "knotvol/faces.hpp"
#include "knotvol/geometry.hpp"
#include "knotvol/lobachevsky.hpp"
#include "knotvol/optimize.hpp"
#include "knotvol/pd.hpp"
#include "knotvol/verify.hpp"
