#pragma once

// Convenience header pulling in the whole library.

#include "signet/degree_indices.hpp"
#include "signet/distance_indices.hpp"
#include "signet/generators.hpp"
#include "signet/io.hpp"
#include "signet/oracle.hpp"
#include "signet/signed_graph.hpp"
