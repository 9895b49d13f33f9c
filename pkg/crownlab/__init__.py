from .coloring import (
    ColorNotInList,
    ExtensionSolver,
    ImproperColoring,
    Rainbow,
    RainbowError,
    check_proper,
    check_rainbow,
    enumerate_extensions,
    extend_coloring,
    lambda_set,
    normalize_lists,
    residual_lists,
    sub_rainbow,
)
from .document import (
    ParseError,
    dumps,
    load_document,
    loads,
    parse_coloring,
    parse_document,
    rainbow_to_document,
)
from .fixtures import FIXTURES, FixtureResult, UnknownFixture, check_fixture, load_fixture
from .instances import (
    SHAPES,
    CapExceeded,
    InstanceGenerator,
    ShapeProfile,
    canonical_code,
    canonical_palette,
    enumerate_instances,
    fan_rotation,
    grow_maps,
    mirror_permutation,
    orderly_form,
    orderly_lists,
    reflect_rotation,
    reflection,
    reflection_code,
    reflection_permutation,
)
from .obstructions import (
    EVEN,
    ODD,
    BaseColoringVerdict,
    Obstruction,
    TiltReport,
    auxiliary_paths,
    base_coloring_verdict,
    edge_tilt,
    find_obstructions,
    g_obstruction_5path,
    has_g_obstruction,
    hub_paths,
    is_fully_even,
    obstruction_signature,
    x_vertices,
)
from .planar import (
    BadIntersection,
    BadOuterFace,
    NonPlanarRotation,
    NotAChord,
    PathSpec,
    PlanarEmbedding,
    WheelClass,
    WheelKind,
    build_embedding,
    chords_of_cycle,
    classify_wheel,
    cycles_up_to,
    embedding_from_positions,
    exterior,
    interior,
    is_induced_cycle,
    is_short_inseparable,
    natural_partition,
    rest_path,
    side_vertices,
    subgraph_GQ,
)
from .sufficiency import (
    BohmeVerdict,
    CrownMembershipReport,
    HypothesisViolation,
    bohme_classify,
    crown_endpoint_profile,
    crown_members,
    crown_membership,
    crown_set,
    end_set,
    failing_colorings,
    find_crown_member,
    is_sufficient,
    universal_colors,
)
from .theorems import (
    BACKGROUND,
    CHECKS,
    THEOREM_IDS,
    UnknownTheorem,
    VerificationReport,
    replay,
    verify,
    verify_5path_crown,
    verify_5path_nonequal,
    verify_background,
    verify_end_2path,
    verify_main,
    verify_T1,
    verify_T2,
    verify_T3,
    verify_T4,
)
from .util import coloring_key, colors_of, mask_of, popcount, repopath, sorted_colorings
