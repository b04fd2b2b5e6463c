#pragma once

// Newton stratification of loop Steinberg cross-sections: exact root-datum
// combinatorics, the Kottwitz set B(G, mu), stratum shapes, the ranked
// dominance poset with its q-identities, and a brute-force GL_n oracle over
// truncated Laurent series.

#include "loopcross/common.hpp"
#include "loopcross/cross_section.hpp"
#include "loopcross/fq_oracle.hpp"
#include "loopcross/isocrystal.hpp"
#include "loopcross/laurent.hpp"
#include "loopcross/linalg.hpp"
#include "loopcross/newton_poset.hpp"
#include "loopcross/reports.hpp"
#include "loopcross/root_datum.hpp"
