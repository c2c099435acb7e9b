# Ground set
MAX_GROUND_SET = 16            # tope duro para n (2^n valores por función)
MIN_CLOSE_PAIR_N = 2           # close pairs requieren al menos dos elementos

# === PRACTICAL LIMITS (enumeraciones exponenciales) ===

RAY_ENUMERATION_MAX_N = 5      # doble descripción sobre el cono supermodular
BIG_ENUMERATION_N = 5          # n >= 5 requiere --allow-big (varios minutos)
GP_VERTEX_MAX_N = 9            # greedy sobre n! permutaciones
PATH_SUM_MAX_N = 8             # chequeo de sumas de camino sobre n! permutaciones
BALANCED_ENUMERATION_MAX_N = 4
BALANCED_SLOW_N = 4            # N = 4 es lento en modo de soporte
DET_BRUTE_FORCE_MAX_N = 4      # 2^(N*N) matrices 0/1
DET_DISTRIBUTION_MAX_N = 3     # compara contra las 2^((N+1)^2) matrices +-1
ANTICHAIN_COUNT_MAX_N = 6
ANTICHAIN_ENUMERATION_MAX_N = 4
MATROID_ENUMERATION_MAX_N = 5
MATROID_SLOW_N = 5
TWO_LAYER_ORACLE_MAX_N = 5

# === RANDOMNESS (generador lineal congruencial documentado) ===

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 2 ** 64
DEFAULT_SEED = 20220801
DEFAULT_TRIALS = 10000
DEFAULT_SEARCH_TRIALS = 2000

# === CONE ENGINE ===

MODULAR_PRIME = 2 ** 61 - 1    # filtro de adyacencia (rango mod p)
PARALLEL_MIN_PAIRS = 4096      # por debajo de esto no vale la pena repartir trabajo
DD_DYNAMIC_ORDER_BUDGET = 400_000  # productos escalares por paso para elegir la próxima fila
DEFAULT_THREADS = 1

# === SVG OUTPUT ===

SVG_WIDTH = 640
SVG_HEIGHT = 560
SVG_MARGIN = 60
SVG_NODE_RADIUS = 14
SVG_FONT_SIZE = 12
SVG_STRICT_COLOR = '#C0392B'   # close pairs con s > 0
SVG_MODULAR_COLOR = '#B0C4DE'  # close pairs con s = 0
SVG_FILL_COLOR = '#E6F2FF'
SVG_STROKE_COLOR = '#4682B4'
SVG_TEXT_COLOR = '#001F3F'
DRAW_POLYTOPE_N = 3            # el polígono se dibuja en el plano x1+x2+x3 = f([3])
DRAW_LATTICE_MAX_N = 4
