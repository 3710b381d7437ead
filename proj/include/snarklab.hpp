#pragma once

#include "snarklab/budget.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/core.hpp"
#include "snarklab/defect.hpp"
#include "snarklab/element_set.hpp"
#include "snarklab/factors.hpp"
#include "snarklab/gadgets.hpp"
#include "snarklab/invariants.hpp"
#include "snarklab/io.hpp"
#include "snarklab/report.hpp"
#include "snarklab/stitch.hpp"
#include "snarklab/verify.hpp"
