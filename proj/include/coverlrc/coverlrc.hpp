#ifndef COVERLRC_COVERLRC_HPP
#define COVERLRC_COVERLRC_HPP

#include "coverlrc/counting.hpp"
#include "coverlrc/cover_lrc.hpp"
#include "coverlrc/cover_metric.hpp"
#include "coverlrc/gf.hpp"
#include "coverlrc/linear_code.hpp"
#include "coverlrc/matrix.hpp"
#include "coverlrc/polynomial.hpp"
#include "coverlrc/reed_solomon.hpp"
#include "coverlrc/sampling.hpp"
#include "coverlrc/serialize.hpp"
#include "coverlrc/tamo_barg.hpp"

#endif  // COVERLRC_COVERLRC_HPP
