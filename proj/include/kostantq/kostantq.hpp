#pragma once

#include "kostantq/branching_gt.hpp"
#include "kostantq/chamber.hpp"
#include "kostantq/error.hpp"
#include "kostantq/exact_linalg.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/multiplicity.hpp"
#include "kostantq/numeric.hpp"
#include "kostantq/parallel.hpp"
#include "kostantq/partition_fn.hpp"
#include "kostantq/qpolynomial.hpp"
#include "kostantq/symmetric_fn.hpp"
