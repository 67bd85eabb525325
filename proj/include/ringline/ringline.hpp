#pragma once

#include "ringline/algebra.hpp"
#include "ringline/catalog.hpp"
#include "ringline/cli.hpp"
#include "ringline/errors.hpp"
#include "ringline/export.hpp"
#include "ringline/models.hpp"
#include "ringline/parallelism.hpp"
#include "ringline/projline.hpp"
#include "ringline/report.hpp"
#include "ringline/ring.hpp"
#include "ringline/verify.hpp"
