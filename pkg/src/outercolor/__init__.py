"""3-coloring extension on outerplane graphs with few triangles."""

from .decompose import (Augmentation, ConnectedOuterplane, DecompositionResult,
                        augment_to_biconnected, decompose_to_small_faces)
from .errors import (AdjustmentFailed, BadCycle, ChordIsCycleEdge, CrossingChords, DuplicateEdge,
                     InconsistentAnchor, InfeasibleSpec, NoSafeAugmentation, NoSafeChord,
                     OutercolorError, ParseError, PreconditionViolated, ValidationError)
from .extend import (INFEASIBLE, NOT_COVERED, SUCCESS, AuxGraph, ExtensionInstance, ExtensionResult,
                     case_distinct, case_same, case_two_one, case_two_triangles_distinct,
                     case_two_triangles_same, extend, extend_connected)
from .graph import (Face, OuterplaneGraph, classify_triangles, detect_structures, distance, faces,
                    validate, weak_dual)
from .homcolor import (HomColoring, algorithm1, all_tables, apply_hom, complete_by_hom, face_chain,
                       hom_table)
from .instances import EnumerationSpec, canonical_chords, enumerate_instances, random_instance
from .oracle import EdgeListGraph, check_coloring, count_extensions, oracle_extend

__version__ = "0.1.0"
