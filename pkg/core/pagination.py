from rest_framework.pagination import PageNumberPagination
from rest_framework.response import Response


class StandardPagination(PageNumberPagination):
    """Page-number pagination wrapped in the success envelope."""

    page_size = 25
    page_size_query_param = "page_size"
    max_page_size = 200

    def get_paginated_response(self, data):
        return Response(
            {
                "success": True,
                "data": {
                    "results": data,
                    "pagination": {
                        "count": self.page.paginator.count,
                        "page": self.page.number,
                        "pages": self.page.paginator.num_pages,
                        "page_size": self.get_page_size(self.request),
                        "next": self.get_next_link(),
                        "previous": self.get_previous_link(),
                    },
                },
            }
        )


def paginate(view, request, items, transform):
    """Paginate an in-memory sequence, transforming only the items on the page."""
    paginator = StandardPagination()
    page = paginator.paginate_queryset(items, request, view=view)
    return paginator.get_paginated_response([transform(item) for item in page])
