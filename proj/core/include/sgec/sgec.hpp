#ifndef SGEC_SGEC_HPP
#define SGEC_SGEC_HPP

#include "sgec/centrality.hpp"
#include "sgec/datasets.hpp"
#include "sgec/error.hpp"
#include "sgec/graph.hpp"
#include "sgec/pattern.hpp"
#include "sgec/spectral.hpp"
#include "sgec/tensor.hpp"

#endif  // SGEC_SGEC_HPP
