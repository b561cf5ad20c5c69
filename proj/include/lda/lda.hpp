#pragma once

#include "lda/diff_poly.hpp"
#include "lda/errors.hpp"
#include "lda/factor.hpp"
#include "lda/janet.hpp"
#include "lda/multipoly.hpp"
#include "lda/oracle.hpp"
#include "lda/parser.hpp"
#include "lda/ratfun.hpp"
#include "lda/reduction.hpp"
#include "lda/render.hpp"
#include "lda/scheme.hpp"
#include "lda/symbols.hpp"
#include "lda/system_file.hpp"
