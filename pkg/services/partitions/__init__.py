"""Integer partitions and good partitions of a constant polynomial."""

from .enumeration import (
    Partition,
    enumerate_partitions,
    good_partitions,
    is_good_partition,
    partition_count,
    strip_common_parts,
)

__all__ = [
    'Partition',
    'enumerate_partitions',
    'good_partitions',
    'is_good_partition',
    'partition_count',
    'strip_common_parts',
]
