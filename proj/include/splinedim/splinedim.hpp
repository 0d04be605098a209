#pragma once

#include "assembly.hpp"
#include "errors.hpp"
#include "gallery.hpp"
#include "ledges.hpp"
#include "linform.hpp"
#include "local.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "partition_io.hpp"
#include "poly2.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "report.hpp"
