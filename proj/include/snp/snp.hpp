#pragma once

// Umbrella header: pulls in the whole toolkit.

#include "snp/dependency.hpp"
#include "snp/digraph.hpp"
#include "snp/generators.hpp"
#include "snp/good_order.hpp"
#include "snp/io.hpp"
#include "snp/matching.hpp"
#include "snp/median_order.hpp"
#include "snp/rational.hpp"
#include "snp/reference.hpp"
#include "snp/verify.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"
