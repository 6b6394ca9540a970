from listcore.exceptions import ListLabException


class EmptyAfterPreprocessingException(ListLabException):
    message = "Nothing Left After Preprocessing"


class EmptySequenceException(ListLabException):
    message = "Empty Request Sequence"


class EmptyAlphabetException(ListLabException):
    message = "Empty Alphabet"


class InvalidDistributionException(ListLabException):
    message = "Invalid Sequence Distribution"


class CorpusUnreadableException(ListLabException):
    message = "Corpus File Unreadable"


class InvalidStripBytesException(ListLabException):
    message = "Invalid Strip Byte List"
