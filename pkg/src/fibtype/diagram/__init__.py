from .coloring import ColoredDisk, PatternMatch, color_faces, forbidden_patterns, from_triangles, parse_disk
from .lanes import AntLane, LaneElement, LaneSet, StructuralError, ant_walk, lane_curvature, lane_decomposition, lane_shape
from .model import (Corner, CurvatureReport, DiagramError, Edge, VanKampenDiagram, assign_angles, boundary_word,
                    cancelling_pairs, curvature_report, from_embedding, is_reduced, parse, parse_and_validate,
                    single_face, validate, vertex_label, xx_violations, z_placement_check)

__all__ = [
    "AntLane", "ColoredDisk", "Corner", "CurvatureReport", "DiagramError", "Edge", "LaneElement", "LaneSet",
    "PatternMatch", "StructuralError", "VanKampenDiagram", "ant_walk", "assign_angles", "boundary_word",
    "cancelling_pairs", "color_faces", "curvature_report", "forbidden_patterns", "from_embedding",
    "from_triangles", "is_reduced", "lane_curvature", "lane_decomposition", "lane_shape", "parse",
    "parse_and_validate", "parse_disk", "single_face", "validate", "vertex_label", "xx_violations",
    "z_placement_check",
]
