#pragma once

#include "charsub/census.hpp"
#include "charsub/classify.hpp"
#include "charsub/commutant.hpp"
#include "charsub/enumerate.hpp"
#include "charsub/errors.hpp"
#include "charsub/gf2.hpp"
#include "charsub/nilpotent.hpp"
#include "charsub/shoda.hpp"
#include "charsub/text_format.hpp"
