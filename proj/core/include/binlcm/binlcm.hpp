#pragma once

#include "binlcm/error.hpp"
#include "binlcm/factored.hpp"
#include "binlcm/identities.hpp"
#include "binlcm/natural.hpp"
#include "binlcm/padic.hpp"
#include "binlcm/primes.hpp"
#include "binlcm/verify.hpp"
