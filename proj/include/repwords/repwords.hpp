#pragma once

#include "repwords/algebra.hpp"
#include "repwords/construction.hpp"
#include "repwords/error.hpp"
#include "repwords/monotone.hpp"
#include "repwords/oracle.hpp"
#include "repwords/patterns.hpp"
#include "repwords/witness.hpp"
#include "repwords/word.hpp"
