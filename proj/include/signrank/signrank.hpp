#pragma once

#include "signrank/embeddings.hpp"
#include "signrank/enumeration.hpp"
#include "signrank/errors.hpp"
#include "signrank/generators.hpp"
#include "signrank/matrix.hpp"
#include "signrank/spectral.hpp"
#include "signrank/stabbing.hpp"
#include "signrank/vc.hpp"
