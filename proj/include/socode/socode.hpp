#pragma once

// Convenience umbrella for the whole library.

#include "socode/bitmat.hpp"
#include "socode/embedding.hpp"
#include "socode/io.hpp"
#include "socode/linear_code.hpp"
#include "socode/quantum.hpp"
#include "socode/reed_muller.hpp"
#include "socode/search.hpp"
#include "socode/so_analysis.hpp"
