// Umbrella header.
#pragma once

#include "pea/axiom_suite.hpp"
#include "pea/bits.hpp"
#include "pea/chain.hpp"
#include "pea/config.hpp"
#include "pea/envfile.hpp"
#include "pea/equiv.hpp"
#include "pea/eval.hpp"
#include "pea/exclusion.hpp"
#include "pea/ideal.hpp"
#include "pea/parse.hpp"
#include "pea/partition_algebra.hpp"
#include "pea/print.hpp"
#include "pea/report.hpp"
#include "pea/sampling.hpp"
#include "pea/sequence.hpp"
#include "pea/set_algebra.hpp"
#include "pea/term.hpp"
#include "pea/transformation.hpp"
#include "pea/witness.hpp"
