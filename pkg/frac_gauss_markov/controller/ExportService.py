from io import StringIO
from typing import Callable

from pandas import DataFrame
from tqdm import tqdm

FLOAT_FORMAT: str = "%.17g"
METADATA_PREFIX: str = "#"


class ExportService:
    """
    An ExportService object writes command results to a file format that an end user can work with.
    Every file starts with a metadata preamble of '#'-prefixed key,value rows, followed by the table.
    In order to add a new file type, implement a static method that accepts a DataFrame, a metadata dict and a
    progress flag and returns a StringIO, then add it to export_type_mapping in the constructor.
    """
    def __init__(self):
        self.export_type_mapping: dict[str, Callable] = {
            'csv': self.export_csv
        }

    def get_filetypes(self) -> list[str]:
        return list(self.export_type_mapping.keys())

    def export(self, df: DataFrame, metadata: dict, filetype: str = 'csv', progress: bool = False) -> StringIO:
        if filetype not in self.export_type_mapping:
            raise ValueError(f"{filetype} is not a valid export format")
        file_object: StringIO = self.export_type_mapping[filetype](df, metadata, progress)
        file_object.seek(0)

        return file_object

    @staticmethod
    def _format_value(value) -> str:
        if isinstance(value, float):
            return FLOAT_FORMAT % value
        if isinstance(value, (list, tuple)):
            return ' '.join(ExportService._format_value(v) for v in value)
        return str(value).replace('\n', ' ')

    @staticmethod
    def write_metadata(buffer: StringIO, metadata: dict):
        for key, value in metadata.items():
            buffer.write(f"{METADATA_PREFIX}{key},{ExportService._format_value(value)}\n")

    @staticmethod
    def export_csv(df: DataFrame, metadata: dict, progress: bool = False) -> StringIO:
        """
        Accepts a DataFrame and its metadata and returns a CSV file as a StringIO.
        Floats are written with 17 significant digits and a '.' decimal point regardless of locale.
        :param df: the table to export. A named index is written as the first column.
        :type df: DataFrame
        :param metadata: key,value pairs written before the table
        :type metadata: dict
        :param progress: show a tqdm progress bar while writing
        :type progress: bool
        :return: The contents of the exported file in CSV format.
        :rtype: StringIO
        """
        csv_object = StringIO()
        ExportService.write_metadata(csv_object, metadata)
        write_index: bool = df.index.name is not None or any(name is not None for name in df.index.names)
        chunk_size = 1000
        with tqdm(total=len(df), desc="Exporting to CSV", unit="rows", leave=False, disable=not progress) as pbar:
            df.iloc[:chunk_size].to_csv(csv_object, index=write_index, float_format=FLOAT_FORMAT, lineterminator='\n')
            pbar.update(min(len(df), chunk_size))
            for start in range(chunk_size, len(df), chunk_size):
                subset = df.iloc[start:start + chunk_size]
                subset.to_csv(csv_object, header=False, index=write_index, float_format=FLOAT_FORMAT,
                              lineterminator='\n')
                pbar.update(len(subset))

        return csv_object
