# Domain value objects: immutable, hashable, no persistence.
from app.entity.cyclo_element import CycloElement
from app.entity.finite_field import FieldTower, FqElement, GaloisField
from app.entity.radical import Radical, RadicalSet

__all__ = ["CycloElement", "FieldTower", "FqElement", "GaloisField", "Radical", "RadicalSet"]
