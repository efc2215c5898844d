#ifndef HYPERCYL_HYPERCYL_HPP
#define HYPERCYL_HYPERCYL_HPP

#include "hypercyl/cylinder.hpp"
#include "hypercyl/embedding.hpp"
#include "hypercyl/fixtures.hpp"
#include "hypercyl/graycode.hpp"
#include "hypercyl/hypercube.hpp"
#include "hypercyl/typeseq.hpp"
#include "hypercyl/verify.hpp"

#endif  // HYPERCYL_HYPERCYL_HPP
