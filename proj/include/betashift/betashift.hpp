#pragma once

#include "constructions.hpp"
#include "count_report.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "kneading.hpp"
#include "language.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "theorems.hpp"
#include "word.hpp"
