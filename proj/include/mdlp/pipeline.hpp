#pragma once

#include "mdlp/dataset.hpp"
#include "mdlp/index.hpp"

namespace mdlp {

// Decodes every manifest entry and computes its signature, producing an
// index ready to save or query. Extraction fans out across `jobs` threads;
// entry order follows the manifest, so the result is deterministic.
IndexData build_index(const DatasetManifest& manifest, const PatternParams& params,
                      DescriptorMode mode, bool normalize, int jobs = 1);

}  // namespace mdlp
